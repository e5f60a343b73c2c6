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

#include "oracles.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kltcalc::testing {

Rational frac(std::int64_t p, std::int64_t q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string fixture_path(const std::string& relative) {
  return std::string(KLTCALC_FIXTURE_DIR) + "/" + relative;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> fixture_files(const std::string& subdir) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture_path(subdir))) {
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t closed_form_root_count(char type, int n) {
  switch (type) {
    case 'A': return static_cast<std::size_t>(n * (n + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(n * n);
    case 'D': return static_cast<std::size_t>(n * (n - 1));
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

std::vector<IntVec> hand_positive_roots(const std::string& name) {
  if (name == "A2") return {{1, 0}, {0, 1}, {1, 1}};
  // alpha_1 long, alpha_2 short
  if (name == "B2") return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  // alpha_1 short, alpha_2 long
  if (name == "G2") return {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  throw std::invalid_argument("no hand table for " + name);
}

std::vector<IntVec> norm_two_vectors(const CartanMatrix& c, int bound) {
  const std::size_t n = c.size();
  std::vector<IntVec> out;
  IntVec v(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && v[k] == bound) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) q += v[i] * c[i][j] * v[j];
    }
    if (q == 2) out.push_back(v);
  }
  return out;
}

Permutation permutation_of_word(const std::vector<int>& letters, int n) {
  Permutation w;
  for (int i = 0; i <= n; ++i) w.image.push_back(i);
  // w = s_{l1} ... s_{lk}; compose on the right.
  for (int l : letters) {
    Permutation next = w;
    for (int i = 0; i <= n; ++i) {
      int j = i;
      if (i == l) j = l + 1;
      else if (i == l + 1) j = l;
      next.image[i] = w.image[j];
    }
    w = next;
  }
  return w;
}

IntVec permutation_apply_root(const Permutation& w, const IntVec& root) {
  const int n = static_cast<int>(root.size());
  int i = -1, j = -1;
  for (int k = 0; k < n; ++k) {
    if (root[k] != 0 && i < 0) i = k;
    if (root[k] != 0) j = k + 1;
  }
  // root = e_i - e_j
  int a = w.image[i], b = w.image[j];
  IntVec out(n, 0);
  const int sign = a < b ? 1 : -1;
  for (int k = std::min(a, b); k < std::max(a, b); ++k) out[k] = sign;
  return out;
}

std::size_t permutation_inversions(const Permutation& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.image.size(); ++i) {
    for (std::size_t j = i + 1; j < w.image.size(); ++j) {
      if (w.image[i] > w.image[j]) ++count;
    }
  }
  return count;
}

std::uint64_t known_longest_word_count(const std::string& name) {
  static const std::map<std::string, std::uint64_t> table{
      {"A1", 1}, {"A2", 2}, {"A3", 16}, {"A4", 768}, {"B2", 2},
      {"B3", 42}, {"C3", 42}, {"G2", 2}, {"D4", 2316}};
  return table.at(name);
}

std::vector<Rational> type_a_discrepancies(int n, const std::vector<int>& levi,
                                           const std::vector<Rational>& d) {
  const int m = n + 1;
  auto in_levi = [&](int i, int j) {
    for (int k = i; k < j; ++k) {
      if (std::find(levi.begin(), levi.end(), k) == levi.end()) return false;
    }
    return true;
  };
  std::vector<Rational> lambda(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (in_levi(i, j)) continue;
      lambda[i] += 1;
      lambda[j] -= 1;
    }
  }
  for (int i = 0; i < m; ++i) lambda[i] -= Rational(n - i);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i <= a; ++i) lambda[i] -= d[a];
  }
  std::vector<Rational> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!in_levi(i, j)) out.push_back(lambda[i] - lambda[j] - 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

std::int64_t det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

namespace {

std::int64_t minor(const std::vector<IntVec>& cols, const std::vector<std::size_t>& rows) {
  auto pick = [&](const IntVec& v) {
    IntVec out;
    for (auto r : rows) out.push_back(v[r]);
    return out;
  };
  if (cols.size() == 1) return pick(cols[0])[0];
  if (cols.size() == 2) return det2(pick(cols[0]), pick(cols[1]));
  return det3(pick(cols[0]), pick(cols[1]), pick(cols[2]));
}

}  // namespace

std::vector<Rational> cramer_coordinates(const std::vector<IntVec>& gens, const IntVec& v) {
  const std::size_t k = gens.size(), r = v.size();
  if (k == 0 || k > 3) throw std::invalid_argument("cramer: 1..3 generators");
  std::vector<std::size_t> rows(k);
  // Enumerate k-subsets of coordinates until a nonzero minor appears.
  std::vector<bool> mask(r, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  std::int64_t det = 0;
  do {
    rows.clear();
    for (std::size_t i = 0; i < r; ++i) {
      if (mask[i]) rows.push_back(i);
    }
    det = minor(gens, rows);
  } while (det == 0 && std::prev_permutation(mask.begin(), mask.end()));
  if (det == 0) throw std::invalid_argument("cramer: dependent generators");
  std::vector<Rational> coeffs;
  for (std::size_t j = 0; j < k; ++j) {
    auto cols = gens;
    cols[j] = v;
    coeffs.push_back(frac(minor(cols, rows), det));
  }
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j) s += coeffs[j] * gens[j][i];
    if (s != v[i]) return {};
  }
  return coeffs;
}

}  // namespace kltcalc::testing
