// Copyright 2026 The kltcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kltcalc/rational.hpp"

#include <cctype>

#include "kltcalc/error.hpp"

namespace kltcalc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidCartan: return "InvalidCartan";
    case ErrorCode::kUnsupportedRank: return "UnsupportedRank";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotPCharacter: return "NotPCharacter";
    case ErrorCode::kNotReducedWord: return "NotReducedWord";
    case ErrorCode::kCoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::kNonSimplicial: return "NonSimplicial";
    case ErrorCode::kInvalidFan: return "InvalidFan";
    case ErrorCode::kRankCapExceeded: return "RankCapExceeded";
    case ErrorCode::kNotQCartier: return "NotQCartier";
    case ErrorCode::kUnsupported: return "Unsupported";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse,
                "not an exact rational \"" + std::string(text) + "\"");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  if (text.front() == '-') n = -n;
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

IntVec to_integer(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value " + x.get_str() + " is not a machine integer");
    }
    out.push_back(x.get_num().get_si());
  }
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product of unequal sizes");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product of unequal sizes");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * static_cast<long>(b[i]);
  }
  return sum;
}

}  // namespace kltcalc
