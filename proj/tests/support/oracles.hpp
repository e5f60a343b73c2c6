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

#include "kltcalc/rational.hpp"
#include "kltcalc/roots.hpp"

// Test-side reference computations. None of these call into the library's
// root, Weyl group or fan algorithms; they rebuild the answer another way.
namespace kltcalc::testing {

// Canonical p/q; the two-argument mpq constructor does not reduce.
Rational frac(std::int64_t p, std::int64_t q);

std::string fixture_path(const std::string& relative);
std::string read_text(const std::string& path);
std::vector<std::string> fixture_files(const std::string& subdir);

// Known |R+| by type.
std::size_t closed_form_root_count(char type, int rank);

// Hand tables in the simple-root basis (Bourbaki numbering).
std::vector<IntVec> hand_positive_roots(const std::string& name);

// Simply laced types: positive roots are the nonnegative integer vectors v
// with v^T C v = 2. Coefficients are searched up to `bound`.
std::vector<IntVec> norm_two_vectors(const CartanMatrix& cartan, int bound);

// Type A_n as permutations of {0..n}. Simple reflection s_k swaps k-1, k
// (1-based k). Root e_i - e_j (i < j) is alpha_{i+1} + ... + alpha_j.
struct Permutation {
  std::vector<int> image;  // image[i] = w(i)
};
Permutation permutation_of_word(const std::vector<int>& letters, int n);
// Returns the simple-root coordinates of w(root), possibly negative.
IntVec permutation_apply_root(const Permutation& w, const IntVec& root);
std::size_t permutation_inversions(const Permutation& w);

// Reduced-word counts of longest elements, from the literature.
std::uint64_t known_longest_word_count(const std::string& name);

// Flag discrepancies for A_n computed in the e_i coordinates of gl_{n+1}:
// one value per positive root outside the Levi, sorted.
std::vector<Rational> type_a_discrepancies(int n, const std::vector<int>& levi,
                                           const std::vector<Rational>& d_by_simple);

// Exact 2D/3D solve of sum c_j g_j = v for linearly independent g_j, via
// Cramer's rule on a chosen set of coordinates.
std::vector<Rational> cramer_coordinates(const std::vector<IntVec>& gens, const IntVec& v);

std::int64_t det2(const IntVec& a, const IntVec& b);
std::int64_t det3(const IntVec& a, const IntVec& b, const IntVec& c);

}  // namespace kltcalc::testing
