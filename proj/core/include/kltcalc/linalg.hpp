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

#include <cstddef>
#include <optional>
#include <vector>

#include "kltcalc/rational.hpp"

// Small dense exact linear algebra. Matrices are lists of rows; sizes here
// never exceed a few dozen, so nothing is blocked or sparse.
namespace kltcalc::linalg {

using Matrix = std::vector<RatVec>;

Matrix from_integer(const std::vector<IntVec>& rows);

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// `columns` is needed when `rows` is empty.
Echelon row_reduce(Matrix rows, std::size_t columns);

std::size_t rank(const Matrix& rows, std::size_t columns);

// Basis of { x : rows * x = 0 }.
Matrix nullspace(const Matrix& rows, std::size_t columns);

// A solution of rows * x = rhs with every free variable set to zero, or
// nullopt when the system is inconsistent.
std::optional<RatVec> solve(const Matrix& rows, const RatVec& rhs,
                            std::size_t columns);

Rational determinant(Matrix square);

// Throws kInvalidArgument when singular.
Matrix inverse(const Matrix& square);

Matrix transpose(const Matrix& m, std::size_t columns);

RatVec multiply(const Matrix& m, const RatVec& v);

// Positive gcd of the entries (0 for the zero vector).
std::int64_t content(const IntVec& v);

// Divides out the content. Requires a nonzero vector.
IntVec primitive(const IntVec& v);

// Clears denominators of a rational vector and divides out the content.
IntVec primitive_integer(const RatVec& v);

// gcd of the maximal minors of the k x n matrix `rows` (k <= n). Equals the
// index of the lattice spanned by the rows inside its saturation; zero when
// the rows are dependent.
std::int64_t maximal_minor_gcd(const std::vector<IntVec>& rows);

}  // namespace kltcalc::linalg
