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

// Randomized invariants with fixed seeds.
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kltcalc/flag.hpp"
#include "kltcalc/horo.hpp"
#include "kltcalc/json_io.hpp"
#include "kltcalc/oracle.hpp"
#include "kltcalc/toric.hpp"
#include "oracles.hpp"

namespace kltcalc {
namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  // Rational in [0, 1) with denominator up to 12.
  Rational unit_fraction() {
    const long q = 1 + below(12);
    return testing::frac(below(static_cast<int>(q)), q);
  }

  RootDatum type() {
    static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "B2", "B3", "C3",
                                                "C4", "D4", "G2", "F4", "B2xA1"};
    return RootDatum::build(RootSystemSpec::parse(names[below(static_cast<int>(names.size()))]));
  }

  std::vector<int> subset(std::size_t rank, bool proper) {
    for (;;) {
      std::vector<int> s;
      for (std::size_t i = 0; i < rank; ++i) {
        if (below(2)) s.push_back(static_cast<int>(i));
      }
      if (!proper || s.size() < rank) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

TEST(Property, PullbackIsLinear) {
  Gen g(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = g.type();
    const auto p = parabolic(d, g.subset(d.rank(), false));
    auto character = [&] {
      Weight w = Weight::zero(Basis::kFundamentalWeight, d.rank());
      for (int a : p.complement) w += Rational(g.below(7) - 3) * d.fundamental_weight(a);
      return w;
    };
    const Weight l = character(), m = character();
    const auto pl = flag::pullback_coefficients(d, p, l);
    const auto pm = flag::pullback_coefficients(d, p, m);
    const auto sum = flag::pullback_coefficients(d, p, l + m);
    for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_EQ(sum[i], pl[i] + pm[i]);
  }
}

TEST(Property, FractionalBoundariesAreKlt) {
  Gen g(2);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = g.type();
    const auto p = parabolic(d, g.subset(d.rank(), true));
    flag::FlagBoundary b;
    for (int a : p.complement) b.coefficients[a] = g.unit_fraction();
    const auto v = flag::is_klt_flag(d, p, b);
    EXPECT_TRUE(v.klt);
    EXPECT_GT(flag::flag_discrepancies(d, p, b).min_discrepancy(), -1);
  }
}

TEST(Property, WeylActionPermutesRoots) {
  Gen g(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = g.type();
    WeylWord w;
    for (int k = g.below(10); k > 0; --k) w.letters.push_back(g.below(static_cast<int>(d.rank())));
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k) {
      IntVec image = weyl_apply_root(d, w, d.positive_roots()[k]);
      IntVec co = weyl_apply_coroot(d, w, d.positive_coroots()[k]);
      if (!is_positive(image)) {
        for (auto& x : image) x = -x;
        for (auto& x : co) x = -x;
      }
      const auto idx = d.root_index(image);
      ASSERT_TRUE(idx);
      EXPECT_EQ(d.positive_coroots()[*idx], co);
    }
    // Pairings are W-invariant.
    const Weight lambda = d.rho();
    const auto& beta = d.positive_coroots().back();
    EXPECT_EQ(pairing(d, weyl_apply(d, w, lambda), weyl_apply_coroot(d, w, beta)),
              pairing(d, lambda, beta));
  }
}

TEST(Property, ToricDiscrepanciesAboveMinusOne) {
  Gen g(4);
  for (int trial = 0; trial < 40; ++trial) {
    toric::Fan f;
    f.rank = 2;
    const int q = 2 + g.below(10);
    int p = 1 + g.below(q - 1);
    while (std::gcd(p, q) != 1) p = 1 + g.below(q - 1);
    f.rays = {{1, 0}, {p, q}};
    f.cones = {{0, 1}};
    const toric::ToricBoundary d{{g.unit_fraction(), g.unit_fraction()}};
    const auto ledger = toric::toric_discrepancies(f, toric::resolve_fan(f), d);
    EXPECT_TRUE(ledger.strictly_effective);
    for (const auto& e : ledger.entries) EXPECT_GT(e.discrepancy, -1);
  }
}

TEST(Property, LedgerMinIsMonotoneInEachCoefficient) {
  for (const auto& f : testing::fixture_files("horo")) {
    const auto base = json_io::pair_from_json(json_io::parse(testing::read_text(f)));
    auto min_of = [](const horo::HorosphericalPair& p) {
      return horo::horospherical_discrepancies(p).ledger.min_discrepancy();
    };
    const auto m0 = min_of(base);
    for (std::size_t i = 0; i < base.d_G.coefficients.size(); ++i) {
      auto up = base;
      up.d_G.coefficients[i] = (up.d_G.coefficients[i] + 1) / 2;
      EXPECT_LE(*min_of(up), *m0) << f;
    }
    for (int a : base.parab.complement) {
      auto up = base;
      up.d_B.coefficients[a] = (base.d_B.at(a) + 1) / 2;
      EXPECT_LE(*min_of(up), *m0) << f;
    }
  }
}

}  // namespace
}  // namespace kltcalc
