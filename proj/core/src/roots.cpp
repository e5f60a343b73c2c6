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

#include "kltcalc/roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "kltcalc/error.hpp"
#include "kltcalc/linalg.hpp"

namespace kltcalc {

namespace {

bool valid_named_rank(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= kMaxComponentRank;
    case 'B':
    case 'C': return rank >= 2 && rank <= kMaxComponentRank;
    case 'D': return rank >= 3 && rank <= kMaxComponentRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void link(CartanMatrix& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// Connected components of the Dynkin graph, each sorted.
std::vector<std::vector<int>> dynkin_components(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> members{start};
    comp[start] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int i = members[k];
      for (int j = 0; j < n; ++j) {
        if (c[i][j] != 0 && comp[j] < 0) {
          comp[j] = comp[start];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

void validate_cartan(const CartanMatrix& c) {
  const std::size_t n = c.size();
  if (n == 0) throw Error(ErrorCode::kUnsupportedRank, "empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) {
      throw Error(ErrorCode::kInvalidCartan, "matrix is not square");
    }
    if (c[i][i] != 2) {
      throw Error(ErrorCode::kInvalidCartan, "diagonal entry is not 2");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) {
        throw Error(ErrorCode::kInvalidCartan, "positive off-diagonal entry");
      }
      if ((c[i][j] == 0) != (c[j][i] == 0)) {
        throw Error(ErrorCode::kInvalidCartan,
                    "zero pattern is not symmetric");
      }
    }
  }
  for (const auto& members : dynkin_components(c)) {
    if (static_cast<int>(members.size()) > kMaxComponentRank) {
      throw Error(ErrorCode::kUnsupportedRank,
                  "component of rank " + std::to_string(members.size()));
    }
  }
  // Symmetrizer: d_i c[i][j] = d_j c[j][i].
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        const Rational dj = d[i] * c[i][j] / c[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw Error(ErrorCode::kInvalidCartan, "matrix is not symmetrizable");
        }
      }
    }
  }
  // Sylvester: every leading principal minor of d*c must be positive.
  for (std::size_t k = 1; k <= n; ++k) {
    linalg::Matrix minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = d[i] * c[i][j];
    }
    if (linalg::determinant(std::move(minor)) <= 0) {
      throw Error(ErrorCode::kInvalidCartan, "not of finite type");
    }
  }
}

IntVec unit(std::size_t n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

void reflect_root_inplace(const CartanMatrix& c, int i, IntVec& root) {
  std::int64_t p = 0;
  for (std::size_t j = 0; j < root.size(); ++j) p += c[i][j] * root[j];
  root[i] -= p;
}

void reflect_coroot_inplace(const CartanMatrix& c, int i, IntVec& coroot) {
  std::int64_t p = 0;
  for (std::size_t j = 0; j < coroot.size(); ++j) p += c[j][i] * coroot[j];
  coroot[i] -= p;
}

void check_letters(const WeylWord& word, std::size_t rank) {
  for (int l : word.letters) {
    if (l < 0 || static_cast<std::size_t>(l) >= rank) {
      throw Error(ErrorCode::kInvalidArgument,
                  "letter s" + std::to_string(l + 1) + " out of range");
    }
  }
}

}  // namespace

// --- RootSystemSpec ---------------------------------------------------------

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
  RootSystemSpec spec;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('x', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view part = text.substr(pos, end - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0]))) {
      throw Error(ErrorCode::kParse,
                  "bad root system component \"" + std::string(part) + "\"");
    }
    for (char ch : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::kParse,
                    "bad root system component \"" + std::string(part) + "\"");
      }
    }
    const char type = part[0];
    if (std::string_view("ABCDEFG").find(type) == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "unknown type letter in \"" + std::string(part) + "\"");
    }
    if (part.size() > 4) {
      throw Error(ErrorCode::kUnsupportedRank, "rank too large in \"" + std::string(part) + "\"");
    }
    const int rank = std::stoi(std::string(part.substr(1)));
    spec.components.push_back({type, rank});
    pos = end + 1;
  }
  return spec;
}

RootSystemSpec RootSystemSpec::from_cartan(CartanMatrix matrix) {
  RootSystemSpec spec;
  spec.explicit_cartan = std::move(matrix);
  return spec;
}

std::string RootSystemSpec::name() const {
  if (explicit_cartan) return "cartan";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += 'x';
    out += c.type;
    out += std::to_string(c.rank);
  }
  return out;
}

CartanMatrix named_cartan(RootSystemComponent component) {
  const char type = component.type;
  const int n = component.rank;
  if (!valid_named_rank(type, n)) {
    throw Error(ErrorCode::kUnsupportedRank,
                std::string(1, type) + std::to_string(n));
  }
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      break;
    case 'E':
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case 'F':
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

CartanMatrix cartan_matrix(const RootSystemSpec& spec) {
  if (spec.explicit_cartan) {
    validate_cartan(*spec.explicit_cartan);
    return *spec.explicit_cartan;
  }
  if (spec.components.empty()) {
    throw Error(ErrorCode::kUnsupportedRank, "no components");
  }
  std::size_t total = 0;
  for (const auto& comp : spec.components) total += comp.rank > 0 ? comp.rank : 0;
  CartanMatrix c(total, std::vector<int>(total, 0));
  std::size_t offset = 0;
  for (const auto& comp : spec.components) {
    const auto block = named_cartan(comp);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        c[offset + i][offset + j] = block[i][j];
      }
    }
    offset += block.size();
  }
  validate_cartan(c);
  return c;
}

std::size_t positive_root_count(RootSystemComponent component) {
  const std::size_t n = static_cast<std::size_t>(component.rank);
  switch (component.type) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

// --- Weight -----------------------------------------------------------------

Weight& Weight::operator+=(const Weight& other) {
  if (basis_ != other.basis_ || rank() != other.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "weight basis or rank differs");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (basis_ != other.basis_ || rank() != other.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "weight basis or rank differs");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& x : coords_) x *= scalar;
  return *this;
}

// --- words and names --------------------------------------------------------

WeylWord parse_weyl_word(std::string_view text, std::size_t rank) {
  WeylWord word;
  if (text.empty()) return word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.size() < 2 || tok[0] != 's' ||
        !std::all_of(tok.begin() + 1, tok.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw Error(ErrorCode::kParse, "bad word letter \"" + std::string(tok) + "\"");
    }
    const int idx = std::stoi(std::string(tok.substr(1))) - 1;
    if (idx < 0 || static_cast<std::size_t>(idx) >= rank) {
      throw Error(ErrorCode::kParse, "letter out of range \"" + std::string(tok) + "\"");
    }
    word.letters.push_back(idx);
    pos = end + 1;
  }
  return word;
}

std::string to_string(const WeylWord& word) {
  std::string out;
  for (int l : word.letters) {
    if (!out.empty()) out += ',';
    out += 's' + std::to_string(l + 1);
  }
  return out.empty() ? "e" : out;
}

int parse_simple_root(std::string_view name, std::size_t rank) {
  if (name.size() < 2 || name[0] != 'a' ||
      !std::all_of(name.begin() + 1, name.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw Error(ErrorCode::kParse, "bad simple root name \"" + std::string(name) + "\"");
  }
  const int idx = std::stoi(std::string(name.substr(1))) - 1;
  if (idx < 0 || static_cast<std::size_t>(idx) >= rank) {
    throw Error(ErrorCode::kParse, "simple root out of range \"" + std::string(name) + "\"");
  }
  return idx;
}

std::string simple_root_name(int index) { return "a" + std::to_string(index + 1); }

std::string root_label(const IntVec& root) {
  std::string out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto c = root[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const auto a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += simple_root_name(static_cast<int>(i));
  }
  return out.empty() ? "0" : out;
}

// --- RootDatum --------------------------------------------------------------

RootDatum RootDatum::build(const RootSystemSpec& spec) {
  RootDatum d;
  d.name_ = spec.name();
  d.cartan_ = cartan_matrix(spec);
  const std::size_t n = d.cartan_.size();

  // Reflection closure from the simple roots, keeping positive images.
  std::map<IntVec, IntVec> found;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    found.emplace(unit(n, static_cast<int>(i)), unit(n, static_cast<int>(i)));
    queue.push_back(unit(n, static_cast<int>(i)));
  }
  while (!queue.empty()) {
    const IntVec root = queue.front();
    queue.pop_front();
    const IntVec coroot = found.at(root);
    for (std::size_t i = 0; i < n; ++i) {
      IntVec r = root;
      reflect_root_inplace(d.cartan_, static_cast<int>(i), r);
      if (!is_positive(r) || found.count(r)) continue;
      IntVec k = coroot;
      reflect_coroot_inplace(d.cartan_, static_cast<int>(i), k);
      found.emplace(r, std::move(k));
      queue.push_back(std::move(r));
    }
  }
  std::vector<IntVec> roots;
  for (const auto& [r, k] : found) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), [](const IntVec& a, const IntVec& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (std::size_t i = 0; i < roots.size(); ++i) {
    d.index_.emplace(roots[i], i);
    d.coroots_.push_back(found.at(roots[i]));
  }
  d.roots_ = std::move(roots);

  // Fundamental weights: rows of (C^T)^{-1}.
  linalg::Matrix ct(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ct[i][j] = d.cartan_[j][i];
  }
  const auto inv = linalg::inverse(ct);
  for (std::size_t i = 0; i < n; ++i) {
    d.fundamental_.emplace_back(Basis::kSimpleRoot, inv[i]);
  }
  return d;
}

std::optional<std::size_t> RootDatum::root_index(const IntVec& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w = Weight::zero(Basis::kFundamentalWeight, rank());
  RatVec c = w.coords();
  c.at(static_cast<std::size_t>(i)) = 1;
  return Weight(Basis::kFundamentalWeight, std::move(c));
}

Weight RootDatum::simple_root(int i) const {
  RatVec c(rank(), Rational(0));
  c.at(static_cast<std::size_t>(i)) = 1;
  return Weight(Basis::kSimpleRoot, std::move(c));
}

Weight RootDatum::rho() const {
  return Weight(Basis::kFundamentalWeight, RatVec(rank(), Rational(1)));
}

Weight RootDatum::to_basis(const Weight& w, Basis target) const {
  if (w.rank() != rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "weight rank differs from datum");
  }
  if (w.basis() == target) return w;
  const std::size_t n = rank();
  RatVec out(n, Rational(0));
  if (target == Basis::kFundamentalWeight) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i] += cartan_[i][j] * w.coords()[j];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out[j] += w.coords()[i] * fundamental_[i].coords()[j];
      }
    }
  }
  return Weight(target, std::move(out));
}

std::int64_t RootDatum::root_pairing(const IntVec& root, const IntVec& coroot) const {
  std::int64_t p = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) p += coroot[i] * cartan_[i][j] * root[j];
  }
  return p;
}

// --- operations -------------------------------------------------------------

bool is_positive(const IntVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

int height(const IntVec& root) {
  return static_cast<int>(std::accumulate(root.begin(), root.end(), std::int64_t{0}));
}

Rational pairing(const RootDatum& datum, const Weight& w, const IntVec& coroot) {
  if (w.rank() != datum.rank() || coroot.size() != datum.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "pairing: rank mismatch");
  }
  const Weight f = datum.to_basis(w, Basis::kFundamentalWeight);
  return dot(f.coords(), coroot);
}

Weight weyl_apply(const RootDatum& datum, const WeylWord& word, Weight w) {
  check_letters(word, datum.rank());
  const Basis basis = w.basis();
  Weight f = datum.to_basis(w, Basis::kFundamentalWeight);
  RatVec c = f.coords();
  const auto& cm = datum.cartan();
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const int i = *it;
    const Rational fi = c[i];
    if (fi == 0) continue;
    // alpha_i in fundamental coordinates is column i of the Cartan matrix.
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= fi * cm[j][i];
  }
  return datum.to_basis(Weight(Basis::kFundamentalWeight, std::move(c)), basis);
}

IntVec weyl_apply_root(const RootDatum& datum, const WeylWord& word, IntVec root) {
  check_letters(word, datum.rank());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    reflect_root_inplace(datum.cartan(), *it, root);
  }
  return root;
}

IntVec weyl_apply_coroot(const RootDatum& datum, const WeylWord& word, IntVec coroot) {
  check_letters(word, datum.rank());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    reflect_coroot_inplace(datum.cartan(), *it, coroot);
  }
  return coroot;
}

std::vector<std::size_t> inversion_set(const RootDatum& datum, const WeylWord& word) {
  WeylWord inverse{std::vector<int>(word.letters.rbegin(), word.letters.rend())};
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
    if (!is_positive(weyl_apply_root(datum, inverse, datum.positive_roots()[k]))) {
      out.push_back(k);
    }
  }
  return out;
}

IntVec reflect_rho_image(const RootDatum& datum, int letter, IntVec image) {
  const auto& cm = datum.cartan();
  const auto fi = image[letter];
  for (std::size_t j = 0; j < image.size(); ++j) image[j] -= fi * cm[j][letter];
  return image;
}

IntVec rho_image(const RootDatum& datum, const WeylWord& word) {
  check_letters(word, datum.rank());
  IntVec image(datum.rank(), 1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    image = reflect_rho_image(datum, *it, std::move(image));
  }
  return image;
}

std::vector<int> left_descents(const IntVec& image) {
  std::vector<int> out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

WeylWord reduced_word(const RootDatum& datum, IntVec image) {
  WeylWord word;
  for (;;) {
    const auto descents = left_descents(image);
    if (descents.empty()) break;
    word.letters.push_back(descents.front());
    image = reflect_rho_image(datum, descents.front(), std::move(image));
  }
  return word;
}

WeylWord longest_word(const RootDatum& datum, const std::vector<int>& subset) {
  WeylWord word;
  const std::size_t n = datum.rank();
  for (;;) {
    bool extended = false;
    for (int a : subset) {
      if (is_positive(weyl_apply_root(datum, word, unit(n, a)))) {
        word.letters.push_back(a);
        extended = true;
        break;
      }
    }
    if (!extended) return word;
  }
}

ParabolicData parabolic(const RootDatum& datum, std::vector<int> levi) {
  const std::size_t n = datum.rank();
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  for (int a : levi) {
    if (a < 0 || static_cast<std::size_t>(a) >= n) {
      throw Error(ErrorCode::kInvalidArgument, "parabolic index out of range");
    }
  }
  ParabolicData p;
  p.levi = levi;
  std::vector<bool> in_levi(n, false);
  for (int a : levi) in_levi[a] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_levi[i]) p.complement.push_back(static_cast<int>(i));
  }

  RatVec sum(n, Rational(0));
  for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
    const auto& root = datum.positive_roots()[k];
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (root[i] != 0 && !in_levi[i]) inside = false;
    }
    if (inside) {
      p.levi_positive_roots.push_back(k);
      for (std::size_t i = 0; i < n; ++i) sum[i] += static_cast<long>(root[i]);
    } else {
      p.non_levi_positive_roots.push_back(k);
    }
  }
  p.levi_root_sum = Weight(Basis::kSimpleRoot, std::move(sum));
  p.two_rho_superP = Rational(2) * datum.rho() -
                     datum.to_basis(p.levi_root_sum, Basis::kFundamentalWeight);

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  p.w0_levi_word = longest_word(datum, levi);
  WeylWord product = p.w0_levi_word;
  const WeylWord w0 = longest_word(datum, all);
  product.letters.insert(product.letters.end(), w0.letters.begin(), w0.letters.end());
  p.w0P_word = reduced_word(datum, rho_image(datum, product));
  return p;
}

}  // namespace kltcalc
