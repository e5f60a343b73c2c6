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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kltcalc/rational.hpp"

namespace kltcalc {

// cartan[i][j] = <alpha_j, alpha_i^vee>.
using CartanMatrix = std::vector<std::vector<int>>;

// Largest rank accepted for a single simple component.
inline constexpr int kMaxComponentRank = 8;

struct RootSystemComponent {
  char type = 'A';
  int rank = 1;
};

// Either a product of named simple types ("B2xA1") or an explicit Cartan
// matrix. Validation happens in cartan_matrix() / RootDatum::build().
struct RootSystemSpec {
  std::vector<RootSystemComponent> components;
  std::optional<CartanMatrix> explicit_cartan;

  static RootSystemSpec parse(std::string_view text);
  static RootSystemSpec from_cartan(CartanMatrix matrix);

  std::string name() const;
};

// Cartan matrix of a named component, Bourbaki numbering.
CartanMatrix named_cartan(RootSystemComponent component);

// Validated Cartan matrix of the root system. Throws kInvalidCartan or
// kUnsupportedRank.
CartanMatrix cartan_matrix(const RootSystemSpec& spec);

// Closed-form |R+| of a simple component.
std::size_t positive_root_count(RootSystemComponent component);

enum class Basis { kSimpleRoot, kFundamentalWeight };

// A rational weight together with the basis its coordinates refer to.
class Weight {
 public:
  Weight() = default;
  Weight(Basis basis, RatVec coords)
      : basis_(basis), coords_(std::move(coords)) {}

  static Weight zero(Basis basis, std::size_t rank) {
    return Weight(basis, RatVec(rank, Rational(0)));
  }

  Basis basis() const { return basis_; }
  const RatVec& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  // Arithmetic requires both operands in the same basis.
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.basis_ == b.basis_ && a.coords_ == b.coords_;
  }

 private:
  Basis basis_ = Basis::kFundamentalWeight;
  RatVec coords_;
};

// A word in the simple reflections; letters are 0-based simple indices and
// the word acts right-to-left.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

// Parses "s2,s1" (1-based) or "" for the identity.
WeylWord parse_weyl_word(std::string_view text, std::size_t rank);
std::string to_string(const WeylWord& word);

// Parses a simple-root name "a3" into a 0-based index.
int parse_simple_root(std::string_view name, std::size_t rank);
std::string simple_root_name(int index);

// "a1+2a2" style label of an integer vector in the simple-root basis.
std::string root_label(const IntVec& root);

class RootDatum {
 public:
  static RootDatum build(const RootSystemSpec& spec);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return cartan_.size(); }
  const CartanMatrix& cartan() const { return cartan_; }

  // Sorted by height, simple roots first in index order.
  const std::vector<IntVec>& positive_roots() const { return roots_; }
  // Index-aligned with positive_roots(), in the simple-coroot basis.
  const std::vector<IntVec>& positive_coroots() const { return coroots_; }

  std::optional<std::size_t> root_index(const IntVec& root) const;

  // Simple-root-basis coordinates of the fundamental weights (rows of the
  // inverse transposed Cartan matrix).
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

  Weight fundamental_weight(int i) const;  // fundamental basis
  Weight simple_root(int i) const;         // simple-root basis
  Weight rho() const;                      // fundamental basis, all ones

  Weight to_basis(const Weight& w, Basis target) const;

  // <root, coroot^vee> for integer vectors in the simple root / coroot bases.
  std::int64_t root_pairing(const IntVec& root, const IntVec& coroot) const;

 private:
  std::string name_;
  CartanMatrix cartan_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::map<IntVec, std::size_t> index_;
  std::vector<Weight> fundamental_;
};

// Nonzero with all coordinates >= 0.
bool is_positive(const IntVec& v);
int height(const IntVec& root);

// <w, beta^vee>, exact. Throws kDimensionMismatch on size mismatch.
Rational pairing(const RootDatum& datum, const Weight& w, const IntVec& coroot);

Weight weyl_apply(const RootDatum& datum, const WeylWord& word, Weight w);
IntVec weyl_apply_root(const RootDatum& datum, const WeylWord& word,
                       IntVec root);
IntVec weyl_apply_coroot(const RootDatum& datum, const WeylWord& word,
                         IntVec coroot);

// { beta in R+ : word^{-1}(beta) < 0 }, as sorted positive-root indices.
std::vector<std::size_t> inversion_set(const RootDatum& datum,
                                       const WeylWord& word);

// A Weyl group element is identified by w(rho), whose fundamental-weight
// coordinates are integers; rho is regular, so the map is injective.
IntVec rho_image(const RootDatum& datum, const WeylWord& word);
IntVec reflect_rho_image(const RootDatum& datum, int letter, IntVec image);
// Simple indices i with l(s_i w) < l(w).
std::vector<int> left_descents(const IntVec& image);
// Reduced word of the element, taking the smallest left descent first.
WeylWord reduced_word(const RootDatum& datum, IntVec image);

// Longest element of the subgroup generated by `subset`, as a reduced word.
WeylWord longest_word(const RootDatum& datum, const std::vector<int>& subset);

struct ParabolicData {
  std::vector<int> levi;        // I, sorted
  std::vector<int> complement;  // S \ I, sorted
  std::vector<std::size_t> levi_positive_roots;
  std::vector<std::size_t> non_levi_positive_roots;  // R+ \ R+_I
  Weight levi_root_sum;     // sum of R+_I, simple-root basis
  Weight two_rho_superP;    // 2 rho - levi_root_sum, fundamental basis
  WeylWord w0P_word;        // reduced, inversion set R+ \ R+_I
  WeylWord w0_levi_word;    // longest element of W_I
};

ParabolicData parabolic(const RootDatum& datum, std::vector<int> levi);

}  // namespace kltcalc
