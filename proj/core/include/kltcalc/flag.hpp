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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kltcalc/rational.hpp"
#include "kltcalc/roots.hpp"

// Bott-Samelson discrepancy ledgers for B-stable pairs (G/P, D).
namespace kltcalc::flag {

// Coefficients d_alpha of D = sum d_alpha D_alpha, keyed by simple index in
// S \ I. Missing keys mean 0.
struct FlagBoundary {
  std::map<int, Rational> coefficients;

  Rational at(int alpha) const {
    auto it = coefficients.find(alpha);
    return it == coefficients.end() ? Rational(0) : it->second;
  }
};

// Checks keys lie in S \ I and values in [0, 1].
void validate_boundary(const ParabolicData& parab, const FlagBoundary& d);

struct BSEntry {
  std::string divisor;   // "E1", "E2", ...
  std::size_t beta = 0;  // positive-root index of beta_i
  Rational discrepancy;
  // Informational only: false when beta_i = w_{0,P}(alpha) for some
  // alpha in S \ I, i.e. E_i is the strict transform of D_alpha.
  bool exceptional = true;
};

struct BSLedger {
  WeylWord word;
  std::vector<std::size_t> betas;
  std::vector<BSEntry> entries;

  Rational min_discrepancy() const;
};

// beta_i = s_{a_1} ... s_{a_{i-1}}(a_i) along w0P_word.
std::vector<std::size_t> beta_sequence(const RootDatum& datum,
                                       const ParabolicData& parab);

// Same along a caller-supplied word, which must be a reduced word of the
// element carried by w0P_word: kNotReducedWord if it is not reduced,
// kInvalidArgument if it reduces to another element.
std::vector<std::size_t> beta_sequence(const RootDatum& datum,
                                       const ParabolicData& parab,
                                       const WeylWord& word);

// Throws kNotPCharacter unless <lambda, alpha^vee> = 0 for all alpha in I.
void require_p_character(const RootDatum& datum, const ParabolicData& parab,
                         const Weight& lambda);

// <lambda, beta_i^vee> in word order.
std::vector<Rational> pullback_coefficients(const RootDatum& datum,
                                            const ParabolicData& parab,
                                            const Weight& lambda);
std::vector<Rational> pullback_coefficients(const RootDatum& datum,
                                            const ParabolicData& parab,
                                            const Weight& lambda,
                                            const WeylWord& word);

// <lambda, alpha^vee> on each D_alpha, alpha in S \ I.
std::map<int, Rational> schubert_divisor_of_character(
    const RootDatum& datum, const ParabolicData& parab, const Weight& lambda);

// <rho, beta_i^vee> + 1, the coefficients of -K on the resolution.
std::vector<Rational> anticanonical_bs(const RootDatum& datum,
                                       const ParabolicData& parab);

// 2 rho^P - rho - sum d_alpha varpi_alpha, fundamental basis.
Weight discrepancy_weight(const RootDatum& datum, const ParabolicData& parab,
                          const FlagBoundary& d);

BSLedger flag_discrepancies(const RootDatum& datum, const ParabolicData& parab,
                            const FlagBoundary& d);
BSLedger flag_discrepancies(const RootDatum& datum, const ParabolicData& parab,
                            const FlagBoundary& d, const WeylWord& word);

struct KltWitness {
  std::size_t beta = 0;
  Rational pairing;
};

struct FlagVerdict {
  bool klt = false;
  std::optional<KltWitness> witness;  // set iff !klt
};

FlagVerdict is_klt_flag(const RootDatum& datum, const ParabolicData& parab,
                        const FlagBoundary& d);

}  // namespace kltcalc::flag
