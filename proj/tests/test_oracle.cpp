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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kltcalc/oracle.hpp"
#include "oracles.hpp"

namespace kltcalc {
namespace {

RootDatum datum_of(const std::string& name) {
  return RootDatum::build(RootSystemSpec::parse(name));
}

TEST(Oracle, SweepTypesAndSubsets) {
  std::vector<std::string> names;
  for (const auto& t : oracle::sweep_types(4)) {
    names.push_back(std::string(1, t.type) + std::to_string(t.rank));
  }
  EXPECT_EQ(names, (std::vector<std::string>{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3",
                                             "C4", "D4", "G2"}));
  EXPECT_EQ(oracle::proper_subsets(3).size(), 7u);
  EXPECT_TRUE(oracle::proper_subsets(3).front().empty());
}

TEST(Oracle, InequalityExamples) {
  const auto a2 = datum_of("A2");
  // I empty: the reformulated weight is zero, so every beta is a witness.
  const auto borel = oracle::check_root_inequality(a2, parabolic(a2, {}));
  EXPECT_EQ(borel.min_value, Rational(0));
  EXPECT_EQ(borel.witnesses.size(), a2.positive_roots().size());

  const auto p = parabolic(a2, {0});
  const auto c = oracle::check_root_inequality(a2, p);
  EXPECT_TRUE(c.inequality_holds);
  EXPECT_TRUE(c.reformulation_agrees);
  EXPECT_TRUE(c.longest_element_route_agrees);
  ASSERT_EQ(c.witnesses.size(), 1u);
  EXPECT_EQ(a2.positive_roots()[c.witnesses[0]], (IntVec{1, 1}));
  EXPECT_EQ(c.min_value, Rational(0));
  // Values follow R+ \ R+_I = {a2, a1+a2}.
  EXPECT_EQ(c.values, (std::vector<Rational>{Rational(1), Rational(0)}));
}

TEST(Oracle, LeviLongestIdentity) {
  for (const std::string name : {"A2", "B2", "G2", "B3", "C3", "D4"}) {
    const auto d = datum_of(name);
    for (const auto& levi : oracle::proper_subsets(d.rank())) {
      EXPECT_TRUE(oracle::verify_levi_longest_identity(d, parabolic(d, levi))) << name;
    }
    std::vector<int> all(d.rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    EXPECT_TRUE(oracle::verify_levi_longest_identity(d, parabolic(d, all)));
  }
  // s_1(varpi_1) = varpi_1 - alpha_1 in A2.
  const auto a2 = datum_of("A2");
  const Weight w = weyl_apply(a2, parse_weyl_word("s1", 2), a2.fundamental_weight(0));
  EXPECT_EQ(w, a2.fundamental_weight(0) - a2.to_basis(a2.simple_root(0), Basis::kFundamentalWeight));
}

TEST(Oracle, EqualityCharacterization) {
  const auto a2 = datum_of("A2");
  const auto p = parabolic(a2, {0});
  EXPECT_TRUE(oracle::verify_equality_characterization(a2, p));
  // s_1(a1+a2) = a2 lies in R+_{S\I}; s_1(a2) = a1+a2 does not.
  EXPECT_EQ(weyl_apply_root(a2, p.w0_levi_word, {1, 1}), (IntVec{0, 1}));
  EXPECT_EQ(weyl_apply_root(a2, p.w0_levi_word, {0, 1}), (IntVec{1, 1}));
  for (const std::string name : {"B3", "C3", "G2", "D4", "A4"}) {
    const auto d = datum_of(name);
    for (const auto& levi : oracle::proper_subsets(d.rank())) {
      EXPECT_TRUE(oracle::verify_equality_characterization(d, parabolic(d, levi)));
    }
  }
}

TEST(Oracle, ReducedWordCountsMatchLiterature) {
  for (const std::string name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4"}) {
    const auto d = datum_of(name);
    const auto image = rho_image(d, parabolic(d, {}).w0P_word);
    EXPECT_EQ(oracle::count_reduced_words(d, image, 1u << 30), testing::known_longest_word_count(name))
        << name;
  }
  const auto a4 = datum_of("A4");
  const auto image = rho_image(a4, parabolic(a4, {}).w0P_word);
  EXPECT_EQ(oracle::count_reduced_words(a4, image, 100), 100u);  // saturates
}

TEST(Oracle, EnumeratedWordsAreDistinctReducedWords) {
  const auto b3 = datum_of("B3");
  const auto image = rho_image(b3, parabolic(b3, {}).w0P_word);
  const auto words = oracle::all_reduced_words(b3, image);
  EXPECT_EQ(words.size(), 42u);
  std::set<WeylWord> distinct(words.begin(), words.end());
  EXPECT_EQ(distinct.size(), words.size());
  for (const auto& w : words) {
    EXPECT_EQ(rho_image(b3, w), image);
    EXPECT_EQ(w.length(), 9u);
  }
}

TEST(Oracle, SampledWordsAreDeterministic) {
  const auto a4 = datum_of("A4");
  const auto image = rho_image(a4, parabolic(a4, {}).w0P_word);
  const auto s1 = oracle::sample_reduced_words(a4, image, 150, 99);
  const auto s2 = oracle::sample_reduced_words(a4, image, 150, 99);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.size(), 150u);
  std::set<WeylWord> distinct(s1.begin(), s1.end());
  EXPECT_EQ(distinct.size(), s1.size());
  for (const auto& w : s1) EXPECT_EQ(rho_image(a4, w), image);
}

TEST(Oracle, WordIndependenceExamples) {
  flag::FlagBoundary none;
  const auto a1 = datum_of("A1");
  auto c = oracle::verify_beta_set_and_word_independence(a1, parabolic(a1, {}), 0, none);
  EXPECT_EQ(c.words_checked, 1u);
  const auto a2 = datum_of("A2");
  c = oracle::verify_beta_set_and_word_independence(a2, parabolic(a2, {}), 0, none);
  EXPECT_EQ(c.words_checked, 2u);
  EXPECT_TRUE(c.beta_sets_match);
  const auto a3 = datum_of("A3");
  flag::FlagBoundary half{{{0, Rational(1, 2)}, {2, Rational(1, 2)}}};
  c = oracle::verify_beta_set_and_word_independence(a3, parabolic(a3, {1}), 0, half);
  EXPECT_TRUE(c.beta_sets_match);
  EXPECT_TRUE(c.multisets_agree);
  EXPECT_TRUE(c.exhaustive);
  EXPECT_GT(c.words_checked, 1u);
}

TEST(Oracle, KltCriterionExamples) {
  const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    const auto d = datum_of(name);
    for (const auto& levi : oracle::proper_subsets(d.rank())) {
      const auto p = parabolic(d, levi);
      const auto k = oracle::verify_klt_criterion(d, p, grid);
      EXPECT_TRUE(k.holds);
      std::size_t points = 1;
      for (std::size_t i = 0; i < p.complement.size(); ++i) points *= grid.size();
      EXPECT_EQ(k.boundaries_checked, points * (1 + p.complement.size()));
      // d = 0: min over beta of <2rho^P - rho, beta^vee> - 1 >= 0.
      EXPECT_GE(flag::flag_discrepancies(d, p, {}).min_discrepancy(), 0);
    }
  }
}

TEST(Oracle, SweepIsDeterministicAcrossThreadCounts) {
  oracle::SweepOptions o;
  o.types = {{'A', 3}, {'B', 2}, {'G', 2}};
  o.threads = 1;
  const auto one = oracle::run_sweep(o);
  o.threads = 3;
  const auto three = oracle::run_sweep(o);
  EXPECT_EQ(oracle::format_table(one, false), oracle::format_table(three, false));
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.cells.size(), 7u + 3u + 3u);
}

TEST(Oracle, InequalityOnlySweep) {
  const auto r = oracle::verify_root_inequality(oracle::sweep_types(8), 3);
  for (const auto& c : r.cells) {
    EXPECT_TRUE(c.passed()) << c.type;
    EXPECT_EQ(c.words_checked, 0u);
  }
  EXPECT_EQ(r.cells.size(), 1u + 3 + 7 + 3 + 7 + 7 + 3);  // A1-3, B2-3, C3, G2
}

}  // namespace
}  // namespace kltcalc
