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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kltcalc {

// Every quantity in the library is an exact rational; nothing is ever
// rounded.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

// Accepts "p", "-p", "p/q". Anything else (floats, exponents, empty
// denominators) is a kParse error.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& value);

RatVec to_rational(const IntVec& v);

// Returns the integer vector if every entry is integral.
bool is_integral(const RatVec& v);
IntVec to_integer(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const IntVec& b);

}  // namespace kltcalc
