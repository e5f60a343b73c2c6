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

#include "kltcalc/error.hpp"
#include "kltcalc/linalg.hpp"
#include "kltcalc/rational.hpp"

namespace kltcalc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kUnsupported;
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, RejectsFloatsAndJunk) {
  for (const char* bad : {"0.5", "1e3", "", "/2", "1/", "1/0", "a", "1/2/3", " 1", "--1"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Linalg, SolveNullspaceInverse) {
  using linalg::Matrix;
  const Matrix m = linalg::from_integer({{2, -1}, {-1, 2}});
  const Matrix inv = linalg::inverse(m);
  EXPECT_EQ(inv[0][0], Rational(2, 3));
  EXPECT_EQ(inv[0][1], Rational(1, 3));
  EXPECT_EQ(linalg::determinant(m), Rational(3));
  const Matrix singular = linalg::from_integer({{1, 2}, {2, 4}});
  EXPECT_EQ(linalg::rank(singular, 2), 1u);
  EXPECT_EQ(linalg::nullspace(singular, 2).size(), 1u);
  EXPECT_THROW(linalg::inverse(singular), Error);
  EXPECT_FALSE(linalg::solve(singular, {Rational(1), Rational(1)}, 2).has_value());
  auto x = linalg::solve(m, {Rational(1), Rational(1)}, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));
}

TEST(Linalg, PrimitiveAndMinors) {
  EXPECT_EQ(linalg::primitive(IntVec{2, -4, 6}), (IntVec{1, -2, 3}));
  EXPECT_EQ(linalg::content(IntVec{0, 6, -9}), 3);
  EXPECT_EQ(linalg::maximal_minor_gcd({{1, 0, 0}, {1, 2, 0}}), 2);
  EXPECT_EQ(linalg::maximal_minor_gcd({{1, 0, 0}, {0, 1, 0}}), 1);
}

}  // namespace
}  // namespace kltcalc
