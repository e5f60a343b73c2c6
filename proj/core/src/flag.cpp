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

#include "kltcalc/flag.hpp"

#include <algorithm>
#include <set>

#include "kltcalc/error.hpp"

namespace kltcalc::flag {

namespace {

IntVec unit(std::size_t n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> betas_along(const RootDatum& datum,
                                     const WeylWord& word) {
  std::vector<std::size_t> out;
  out.reserve(word.length());
  WeylWord prefix;
  for (int letter : word.letters) {
    const IntVec beta =
        weyl_apply_root(datum, prefix, unit(datum.rank(), letter));
    auto idx = datum.root_index(beta);
    if (!idx) {
      throw Error(ErrorCode::kNotReducedWord,
                  "word " + to_string(word) + " is not reduced");
    }
    out.push_back(*idx);
    prefix.letters.push_back(letter);
  }
  return out;
}

std::set<std::size_t> strict_transform_betas(const RootDatum& datum,
                                             const ParabolicData& parab) {
  std::set<std::size_t> out;
  for (int a : parab.complement) {
    const IntVec image =
        weyl_apply_root(datum, parab.w0_levi_word, unit(datum.rank(), a));
    if (auto idx = datum.root_index(image)) out.insert(*idx);
  }
  return out;
}

}  // namespace

Rational BSLedger::min_discrepancy() const {
  if (entries.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty ledger has no minimum");
  }
  Rational m = entries.front().discrepancy;
  for (const auto& e : entries) m = std::min(m, e.discrepancy);
  return m;
}

void validate_boundary(const ParabolicData& parab, const FlagBoundary& d) {
  for (const auto& [alpha, value] : d.coefficients) {
    if (!std::binary_search(parab.complement.begin(), parab.complement.end(),
                            alpha)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "boundary coefficient on " + simple_root_name(alpha) +
                      ", which is not in S \\ I");
    }
    if (value < 0 || value > 1) {
      throw Error(ErrorCode::kCoefficientOutOfRange,
                  "d_" + simple_root_name(alpha) + " = " + to_string(value));
    }
  }
}

std::vector<std::size_t> beta_sequence(const RootDatum& datum,
                                       const ParabolicData& parab) {
  return beta_sequence(datum, parab, parab.w0P_word);
}

std::vector<std::size_t> beta_sequence(const RootDatum& datum,
                                       const ParabolicData& parab,
                                       const WeylWord& word) {
  auto betas = betas_along(datum, word);
  std::set<std::size_t> distinct(betas.begin(), betas.end());
  if (distinct.size() != betas.size()) {
    throw Error(ErrorCode::kNotReducedWord,
                "word " + to_string(word) + " is not reduced");
  }
  if (rho_image(datum, word) != rho_image(datum, parab.w0P_word)) {
    throw Error(ErrorCode::kInvalidArgument,
                "word " + to_string(word) +
                    " is not a reduced word of the coset element " +
                    to_string(parab.w0P_word));
  }
  return betas;
}

void require_p_character(const RootDatum& datum, const ParabolicData& parab,
                         const Weight& lambda) {
  for (int a : parab.levi) {
    const Rational p = pairing(datum, lambda, unit(datum.rank(), a));
    if (p != 0) {
      throw Error(ErrorCode::kNotPCharacter,
                  "weight pairs to " + to_string(p) + " with " +
                      simple_root_name(a) + "^vee");
    }
  }
}

std::vector<Rational> pullback_coefficients(const RootDatum& datum,
                                            const ParabolicData& parab,
                                            const Weight& lambda) {
  return pullback_coefficients(datum, parab, lambda, parab.w0P_word);
}

std::vector<Rational> pullback_coefficients(const RootDatum& datum,
                                            const ParabolicData& parab,
                                            const Weight& lambda,
                                            const WeylWord& word) {
  require_p_character(datum, parab, lambda);
  std::vector<Rational> out;
  for (auto b : beta_sequence(datum, parab, word)) {
    out.push_back(pairing(datum, lambda, datum.positive_coroots()[b]));
  }
  return out;
}

std::map<int, Rational> schubert_divisor_of_character(
    const RootDatum& datum, const ParabolicData& parab, const Weight& lambda) {
  require_p_character(datum, parab, lambda);
  std::map<int, Rational> out;
  for (int a : parab.complement) {
    out.emplace(a, pairing(datum, lambda, unit(datum.rank(), a)));
  }
  return out;
}

std::vector<Rational> anticanonical_bs(const RootDatum& datum,
                                       const ParabolicData& parab) {
  std::vector<Rational> out;
  const Weight rho = datum.rho();
  for (auto b : beta_sequence(datum, parab)) {
    out.push_back(pairing(datum, rho, datum.positive_coroots()[b]) + 1);
  }
  return out;
}

Weight discrepancy_weight(const RootDatum& datum, const ParabolicData& parab,
                          const FlagBoundary& d) {
  Weight w = parab.two_rho_superP - datum.rho();
  for (int a : parab.complement) {
    w -= d.at(a) * datum.fundamental_weight(a);
  }
  return w;
}

BSLedger flag_discrepancies(const RootDatum& datum, const ParabolicData& parab,
                            const FlagBoundary& d) {
  return flag_discrepancies(datum, parab, d, parab.w0P_word);
}

BSLedger flag_discrepancies(const RootDatum& datum, const ParabolicData& parab,
                            const FlagBoundary& d, const WeylWord& word) {
  validate_boundary(parab, d);
  BSLedger ledger;
  ledger.word = word;
  ledger.betas = beta_sequence(datum, parab, word);
  const Weight w = discrepancy_weight(datum, parab, d);
  const auto strict = strict_transform_betas(datum, parab);
  for (std::size_t i = 0; i < ledger.betas.size(); ++i) {
    const auto b = ledger.betas[i];
    ledger.entries.push_back(
        {"E" + std::to_string(i + 1), b,
         pairing(datum, w, datum.positive_coroots()[b]) - 1,
         strict.count(b) == 0});
  }
  return ledger;
}

FlagVerdict is_klt_flag(const RootDatum& datum, const ParabolicData& parab,
                        const FlagBoundary& d) {
  validate_boundary(parab, d);
  const Weight w = discrepancy_weight(datum, parab, d);
  FlagVerdict verdict{true, std::nullopt};
  for (auto b : parab.non_levi_positive_roots) {
    const Rational p = pairing(datum, w, datum.positive_coroots()[b]);
    if (p <= 0 && (!verdict.witness || p < verdict.witness->pairing)) {
      verdict.klt = false;
      verdict.witness = KltWitness{b, p};
    }
  }
  return verdict;
}

}  // namespace kltcalc::flag
