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

#include <cstdint>
#include <string>
#include <vector>

#include "kltcalc/flag.hpp"
#include "kltcalc/rational.hpp"
#include "kltcalc/roots.hpp"

// Exhaustive verification over root systems and their proper parabolics.
// Each (type, I) cell is independent; sweeps evaluate cells on a thread pool
// and merge results in cell order, so reports are deterministic.
namespace kltcalc::oracle {

// Irreducible types of rank <= max_rank from A_n (n >= 1), B_n (n >= 2),
// C_n (n >= 3), D_n (n >= 4) and G_2.
std::vector<RootSystemComponent> sweep_types(int max_rank);

// Every proper subset I of S, in increasing bitmask order.
std::vector<std::vector<int>> proper_subsets(std::size_t rank);

struct InequalityCheck {
  // <2 rho^P - rho - sum_{S\I} varpi, beta^vee> >= 0 for every beta.
  bool inequality_holds = true;
  // Same value as <sum_I varpi - sum R+_I, beta^vee>.
  bool reformulation_agrees = true;
  // Same value as <sum_I varpi, w_{0,P}(beta^vee)>.
  bool longest_element_route_agrees = true;
  Rational min_value;
  // Direct value per beta, aligned with parab.non_levi_positive_roots.
  std::vector<Rational> values;
  std::vector<std::size_t> witnesses;  // betas with value 0
};

InequalityCheck check_root_inequality(const RootDatum& datum, const ParabolicData& parab);

bool verify_levi_longest_identity(const RootDatum& datum, const ParabolicData& parab);

// value == 0 <=> w_{0,P}(beta) in R+_{S \ I}, for all beta, plus existence of
// at least one witness when I != S.
bool verify_equality_characterization(const RootDatum& datum,
                                      const ParabolicData& parab);

// Saturating count of reduced words of the element with the given rho image.
std::uint64_t count_reduced_words(const RootDatum& datum, const IntVec& image,
                                  std::uint64_t cap);
std::vector<WeylWord> all_reduced_words(const RootDatum& datum,
                                        const IntVec& image);
// Up to `budget` distinct words drawn by random left-descent walks with a
// fixed seed.
std::vector<WeylWord> sample_reduced_words(const RootDatum& datum,
                                           const IntVec& image,
                                           std::size_t budget,
                                           std::uint64_t seed);

struct WordCheck {
  bool beta_sets_match = true;
  bool multisets_agree = true;
  std::size_t words_checked = 0;
  bool exhaustive = true;
};

// budget == 0 means enumerate every word.
WordCheck verify_beta_set_and_word_independence(const RootDatum& datum,
                                                const ParabolicData& parab,
                                                std::size_t word_budget,
                                                const flag::FlagBoundary& d);

struct KltCheck {
  bool holds = true;
  std::size_t boundaries_checked = 0;
};

// Grid values must lie in [0, 1). Checks every grid point and every
// single-coefficient promotion to 1.
KltCheck verify_klt_criterion(const RootDatum& datum, const ParabolicData& parab,
                            const std::vector<Rational>& grid);

struct CellRecord {
  std::string type;
  std::vector<int> levi;
  Rational min_value;
  std::vector<IntVec> witnesses;  // roots, simple-root basis

  bool inequality = false;
  bool reformulation = false;
  bool longest_element_route = false;
  bool levi_identity = false;
  bool equality_characterization = false;
  bool beta_sets = false;
  bool word_independence = false;
  bool klt_criterion = false;
  std::size_t words_checked = 0;
  bool words_exhaustive = false;
  std::size_t boundaries_checked = 0;
  double millis = 0;

  bool passed() const;
};

struct SweepOptions {
  std::vector<RootSystemComponent> types;
  bool words = true;
  bool klt = true;
  // Word budget per cell by rank; rank <= exhaustive_rank enumerates all.
  int exhaustive_word_rank = 3;
  std::size_t sampled_words = 200;
  std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2),
                             Rational(3, 4)};
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepReport {
  std::vector<CellRecord> cells;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

SweepReport run_sweep(const SweepOptions& options);

// Inequality cells only (no word or klt checks).
SweepReport verify_root_inequality(const std::vector<RootSystemComponent>& types,
                          int max_rank);

std::string format_table(const SweepReport& report, bool timing);

}  // namespace kltcalc::oracle
