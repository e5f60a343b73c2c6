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

#include "kltcalc/linalg.hpp"

#include <numeric>
#include <utility>

#include "kltcalc/error.hpp"

namespace kltcalc::linalg {

Matrix from_integer(const std::vector<IntVec>& rows) {
  Matrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

Echelon row_reduce(Matrix rows, std::size_t columns) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < columns && lead_row < rows.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead_row]);
    const Rational inv = 1 / rows[lead_row][col];
    for (auto& x : rows[lead_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        rows[r][c] -= factor * rows[lead_row][c];
      }
    }
    e.pivots.push_back(col);
    ++lead_row;
  }
  rows.resize(lead_row);
  e.reduced = std::move(rows);
  return e;
}

std::size_t rank(const Matrix& rows, std::size_t columns) {
  return row_reduce(rows, columns).pivots.size();
}

Matrix nullspace(const Matrix& rows, std::size_t columns) {
  const Echelon e = row_reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const Matrix& rows, const RatVec& rhs,
                            std::size_t columns) {
  if (rows.size() != rhs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "solve: rhs size");
  }
  Matrix augmented = rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (augmented[r].size() != columns) {
      throw Error(ErrorCode::kDimensionMismatch, "solve: row size");
    }
    augmented[r].push_back(rhs[r]);
  }
  const Echelon e = row_reduce(std::move(augmented), columns + 1);
  if (!e.pivots.empty() && e.pivots.back() == columns) return std::nullopt;
  RatVec x(columns, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    x[e.pivots[r]] = e.reduced[r][columns];
  }
  return x;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Matrix inverse(const Matrix& square) {
  const std::size_t n = square.size();
  Matrix augmented = square;
  for (std::size_t r = 0; r < n; ++r) {
    augmented[r].resize(2 * n, Rational(0));
    augmented[r][n + r] = 1;
  }
  const Echelon e = row_reduce(std::move(augmented), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is singular");
  }
  Matrix inv(n);
  for (std::size_t r = 0; r < n; ++r) {
    inv[r].assign(e.reduced[r].begin() + static_cast<std::ptrdiff_t>(n),
                  e.reduced[r].end());
  }
  return inv;
}

Matrix transpose(const Matrix& m, std::size_t columns) {
  Matrix t(columns, RatVec(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) t[c][r] = m[r][c];
  }
  return t;
}

RatVec multiply(const Matrix& m, const RatVec& v) {
  RatVec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

std::int64_t content(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  const auto g = content(v);
  if (g == 0) throw Error(ErrorCode::kInvalidArgument, "zero vector");
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive_integer(const RatVec& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  RatVec scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) scaled.push_back(x * lcm);
  return primitive(to_integer(scaled));
}

namespace {

void minors_rec(const std::vector<IntVec>& rows, std::size_t start,
                std::vector<std::size_t>& chosen, std::int64_t& g) {
  const std::size_t k = rows.size();
  if (chosen.size() == k) {
    Matrix sub(k, RatVec(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        sub[r][c] = static_cast<long>(rows[r][chosen[c]]);
      }
    }
    const Rational det = determinant(std::move(sub));
    g = std::gcd(g, static_cast<std::int64_t>(det.get_num().get_si()));
    return;
  }
  const std::size_t n = rows.front().size();
  for (std::size_t c = start; c < n; ++c) {
    chosen.push_back(c);
    minors_rec(rows, c + 1, chosen, g);
    chosen.pop_back();
  }
}

}  // namespace

std::int64_t maximal_minor_gcd(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 1;
  std::int64_t g = 0;
  std::vector<std::size_t> chosen;
  minors_rec(rows, 0, chosen, g);
  return g;
}

}  // namespace kltcalc::linalg
