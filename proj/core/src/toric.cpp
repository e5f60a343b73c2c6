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

#include "kltcalc/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "kltcalc/error.hpp"
#include "kltcalc/linalg.hpp"

namespace kltcalc::toric {

namespace {

// Calls fn with every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

linalg::Matrix as_rows(const std::vector<IntVec>& gens) {
  return linalg::from_integer(gens);
}

struct FacetData {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<RatVec> normals;
  linalg::Matrix complement;  // basis of the orthogonal complement of the span
  std::size_t dim = 0;
};

FacetData facet_data(const std::vector<IntVec>& gens, int rank) {
  FacetData out;
  const auto r = static_cast<std::size_t>(rank);
  const auto rows = as_rows(gens);
  out.dim = gens.empty() ? 0 : linalg::rank(rows, r);
  out.complement = linalg::nullspace(rows, r);
  if (out.dim == 0) return out;
  std::set<std::vector<std::size_t>> seen;
  for_each_combination(gens.size(), out.dim - 1, [&](const std::vector<std::size_t>& pick) {
    linalg::Matrix m = out.complement;
    for (auto i : pick) m.push_back(rows[i]);
    if (linalg::rank(m, r) != r - 1) return;
    RatVec u = linalg::nullspace(m, r).front();
    bool pos = false, neg = false;
    std::vector<std::size_t> zero;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Rational s = dot(u, gens[j]);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) zero.push_back(j);
    }
    if (pos && neg) return;
    if (neg) {
      for (auto& x : u) x = -x;
    }
    if (seen.insert(zero).second) {
      out.sets.push_back(zero);
      out.normals.push_back(u);
    }
  });
  return out;
}

// Rays of the smallest face containing `subset` (indices into gens).
std::vector<std::size_t> face_closure(const FacetData& fd, std::size_t count,
                                      const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = i;
  std::vector<std::size_t> closure = all;
  for (const auto& f : fd.sets) {
    if (!std::includes(f.begin(), f.end(), subset.begin(), subset.end())) continue;
    std::vector<std::size_t> next;
    std::set_intersection(closure.begin(), closure.end(), f.begin(), f.end(),
                          std::back_inserter(next));
    closure = std::move(next);
  }
  return closure;
}

bool is_pointed(const FacetData& fd, int rank) {
  if (fd.dim == 0) return true;
  return linalg::rank(fd.normals, static_cast<std::size_t>(rank)) == fd.dim;
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidFan, what);
}

// Pulling triangulation of the cone on `ids` (global ray indices).
void pull(const Fan& fan, std::vector<std::size_t> ids,
          std::vector<Cone>& out) {
  std::sort(ids.begin(), ids.end());
  std::vector<IntVec> gens;
  for (auto i : ids) gens.push_back(fan.rays[i]);
  const auto fd = facet_data(gens, fan.rank);
  if (gens.size() == fd.dim) {
    out.push_back(ids);
    return;
  }
  const std::size_t apex = ids.front();
  for (const auto& f : fd.sets) {
    if (!f.empty() && f.front() == 0) continue;  // facet contains the apex
    std::vector<std::size_t> face;
    for (auto j : f) face.push_back(ids[j]);
    std::vector<Cone> sub;
    pull(fan, face, sub);
    for (auto& c : sub) {
      c.push_back(apex);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
  }
}

void canonicalize(Resolution& res) {
  std::vector<std::pair<Cone, std::size_t>> tagged;
  for (std::size_t i = 0; i < res.fan.cones.size(); ++i) {
    Cone c = res.fan.cones[i];
    std::sort(c.begin(), c.end());
    tagged.emplace_back(std::move(c), res.cone_origin[i]);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  res.fan.cones.clear();
  res.cone_origin.clear();
  for (auto& [c, o] : tagged) {
    res.fan.cones.push_back(std::move(c));
    res.cone_origin.push_back(o);
  }
}

std::size_t find_or_add_ray(Resolution& res, const IntVec& ray,
                            std::size_t source_cone, const std::string& reason) {
  for (std::size_t i = 0; i < res.fan.rays.size(); ++i) {
    if (res.fan.rays[i] == ray) return i;
  }
  res.fan.rays.push_back(ray);
  const std::size_t idx = res.fan.rays.size() - 1;
  res.provenance.push_back({idx, source_cone, reason});
  return idx;
}

std::int64_t det2(const IntVec& a, const IntVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Hirzebruch-Jung chain strictly between u and v.
std::vector<IntVec> hirzebruch_jung_chain(const IntVec& u, const IntVec& v) {
  const std::int64_t d = det2(u, v);
  const std::int64_t m = d < 0 ? -d : d;
  const std::int64_t s = d < 0 ? -1 : 1;
  std::vector<IntVec> chain;
  if (m <= 1) return chain;
  // First point: lambda u + v / m integral with 0 <= lambda < 1.
  IntVec w1;
  for (std::int64_t j = 0; j < m; ++j) {
    const std::int64_t x = j * u[0] + v[0], y = j * u[1] + v[1];
    if (x % m == 0 && y % m == 0) {
      w1 = {x / m, y / m};
      break;
    }
  }
  auto dist = [&](const IntVec& x) { return s * det2(x, v); };
  IntVec prev = u, cur = w1;
  while (dist(cur) != 0) {
    chain.push_back(cur);
    const std::int64_t b = ceil_div(dist(prev), dist(cur));
    IntVec next{b * cur[0] - prev[0], b * cur[1] - prev[1]};
    prev = cur;
    cur = next;
  }
  return chain;
}

// Shortest nonzero lattice point sum lambda_i g_i with 0 <= lambda_i < 1.
IntVec shortest_parallelepiped_point(const std::vector<IntVec>& gens,
                                     std::int64_t mult) {
  const std::size_t k = gens.size();
  const std::size_t r = gens.front().size();
  std::vector<std::int64_t> idx(k, 0);
  std::optional<std::pair<std::int64_t, IntVec>> best;
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == mult) idx[pos++] = 0;
    if (pos == k) break;
    IntVec num(r, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < r; ++c) num[c] += idx[i] * gens[i][c];
    }
    bool integral = true;
    for (auto x : num) {
      if (x % mult != 0) integral = false;
    }
    if (!integral) continue;
    IntVec p(r);
    std::int64_t norm = 0;
    for (std::size_t c = 0; c < r; ++c) {
      p[c] = num[c] / mult;
      norm += p[c] * p[c];
    }
    if (!best || std::tie(norm, p) < std::tie(best->first, best->second)) {
      best = std::make_pair(norm, p);
    }
  }
  if (!best) throw Error(ErrorCode::kInvalidArgument, "cone is smooth");
  return best->second;
}

}  // namespace

std::vector<IntVec> generators(const Fan& fan, const Cone& cone) {
  std::vector<IntVec> gens;
  gens.reserve(cone.size());
  for (auto i : cone) gens.push_back(fan.rays.at(i));
  return gens;
}

std::size_t cone_dimension(const std::vector<IntVec>& gens, int rank) {
  if (gens.empty()) return 0;
  return linalg::rank(as_rows(gens), static_cast<std::size_t>(rank));
}

bool is_simplicial(const Fan& fan, const Cone& cone) {
  return cone_dimension(generators(fan, cone), fan.rank) == cone.size();
}

std::int64_t multiplicity(const std::vector<IntVec>& gens) {
  const auto g = linalg::maximal_minor_gcd(gens);
  return g < 0 ? -g : g;
}

bool is_smooth_cone(const Fan& fan, const Cone& cone) {
  if (!is_simplicial(fan, cone)) {
    throw Error(ErrorCode::kNonSimplicial, "cone is not simplicial");
  }
  return cone.empty() || multiplicity(generators(fan, cone)) == 1;
}

bool HRep::contains(const RatVec& x) const {
  for (const auto& e : equalities) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& a : inequalities) {
    if (dot(a, x) < 0) return false;
  }
  return true;
}

bool HRep::contains(const IntVec& x) const { return contains(to_rational(x)); }

HRep h_representation(const std::vector<IntVec>& gens, int rank) {
  auto fd = facet_data(gens, rank);
  return HRep{std::move(fd.normals), std::move(fd.complement)};
}

std::vector<std::vector<std::size_t>> facets(const std::vector<IntVec>& gens,
                                             int rank) {
  return facet_data(gens, rank).sets;
}

std::vector<IntVec> extreme_rays(const HRep& h, int rank) {
  const auto r = static_cast<std::size_t>(rank);
  std::vector<IntVec> out;
  if (r == 0) return out;
  linalg::Matrix all = h.equalities;
  all.insert(all.end(), h.inequalities.begin(), h.inequalities.end());
  std::set<IntVec> seen;
  for_each_combination(all.size(), r - 1, [&](const std::vector<std::size_t>& pick) {
    linalg::Matrix m;
    for (auto i : pick) m.push_back(all[i]);
    if (linalg::rank(m, r) != r - 1) return;
    const RatVec u = linalg::nullspace(m, r).front();
    for (int sign : {1, -1}) {
      RatVec x = u;
      for (auto& c : x) c *= sign;
      if (!h.contains(x)) continue;
      IntVec p = linalg::primitive_integer(x);
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  });
  return out;
}

bool validate_fan(const Fan& fan) {
  if (fan.rank < 0) invalid("negative rank");
  std::set<IntVec> distinct;
  for (const auto& ray : fan.rays) {
    if (ray.size() != static_cast<std::size_t>(fan.rank)) invalid("ray of wrong length");
    if (linalg::content(ray) == 0) invalid("zero ray");
    if (linalg::content(ray) != 1) invalid("ray " + ray_label(ray) + " is not primitive");
    if (!distinct.insert(ray).second) invalid("duplicate ray " + ray_label(ray));
  }
  std::vector<FacetData> data;
  std::set<Cone> seen;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    Cone cone = fan.cones[c];
    for (auto i : cone) {
      if (i >= fan.rays.size()) invalid("cone " + std::to_string(c) + " has a bad ray index");
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      invalid("cone " + std::to_string(c) + " repeats a ray");
    }
    if (!seen.insert(cone).second) invalid("duplicate cone " + std::to_string(c));
    const auto gens = generators(fan, fan.cones[c]);
    auto fd = facet_data(gens, fan.rank);
    if (!is_pointed(fd, fan.rank)) invalid("cone " + std::to_string(c) + " is not pointed");
    if (fd.dim >= 2) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (face_closure(fd, gens.size(), {j}) != std::vector<std::size_t>{j}) {
          invalid("ray " + ray_label(gens[j]) + " is not extremal in cone " +
                  std::to_string(c));
        }
      }
    }
    data.push_back(std::move(fd));
  }
  if (fan.rank > kMaxResolveRank) return false;

  for (std::size_t a = 0; a < fan.cones.size(); ++a) {
    for (std::size_t b = a + 1; b < fan.cones.size(); ++b) {
      const Cone& ca = fan.cones[a];
      const Cone& cb = fan.cones[b];
      HRep h;
      for (const auto* fd : {&data[a], &data[b]}) {
        h.inequalities.insert(h.inequalities.end(), fd->normals.begin(), fd->normals.end());
        h.equalities.insert(h.equalities.end(), fd->complement.begin(), fd->complement.end());
      }
      std::set<std::size_t> common;
      for (auto i : ca) {
        if (std::find(cb.begin(), cb.end(), i) != cb.end()) common.insert(i);
      }
      for (const auto& x : extreme_rays(h, fan.rank)) {
        bool found = false;
        for (auto i : common) found = found || fan.rays[i] == x;
        if (!found) {
          invalid("cones " + std::to_string(a) + " and " + std::to_string(b) +
                  " overlap beyond a common face");
        }
      }
      for (const auto* side : {&ca, &cb}) {
        const auto& fd = side == &ca ? data[a] : data[b];
        std::vector<std::size_t> local;
        for (std::size_t j = 0; j < side->size(); ++j) {
          if (common.count((*side)[j])) local.push_back(j);
        }
        if (face_closure(fd, side->size(), local) != local) {
          invalid("cones " + std::to_string(a) + " and " + std::to_string(b) +
                  " do not meet in a common face");
        }
      }
    }
  }
  return true;
}

Resolution simplicialize(const Fan& fan) {
  Resolution res;
  res.fan.rank = fan.rank;
  res.fan.rays = fan.rays;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<Cone> pieces;
    pull(fan, fan.cones[c], pieces);
    for (auto& p : pieces) {
      res.fan.cones.push_back(std::move(p));
      res.cone_origin.push_back(c);
    }
  }
  canonicalize(res);
  return res;
}

void stellar_subdivide(Resolution& res, const IntVec& point,
                       const std::string& reason) {
  const auto r = static_cast<std::size_t>(res.fan.rank);
  std::vector<Cone> cones;
  std::vector<std::size_t> origin;
  std::optional<std::size_t> new_ray;
  for (std::size_t c = 0; c < res.fan.cones.size(); ++c) {
    const Cone& cone = res.fan.cones[c];
    const auto gens = generators(res.fan, cone);
    std::optional<RatVec> lambda;
    if (!gens.empty()) {
      lambda = linalg::solve(linalg::transpose(as_rows(gens), r), to_rational(point),
                             gens.size());
    }
    const bool inside =
        lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; });
    std::vector<std::size_t> support;
    if (inside) {
      for (std::size_t i = 0; i < cone.size(); ++i) {
        if ((*lambda)[i] > 0) support.push_back(i);
      }
    }
    if (!inside || support.size() <= 1) {
      // Outside, or the point is already one of the cone's rays.
      cones.push_back(cone);
      origin.push_back(res.cone_origin[c]);
      continue;
    }
    if (!new_ray) new_ray = find_or_add_ray(res, point, res.cone_origin[c], reason);
    for (auto i : support) {
      Cone piece = cone;
      piece[i] = *new_ray;
      std::sort(piece.begin(), piece.end());
      cones.push_back(std::move(piece));
      origin.push_back(res.cone_origin[c]);
    }
  }
  if (!new_ray) {
    bool is_ray = std::find(res.fan.rays.begin(), res.fan.rays.end(), point) != res.fan.rays.end();
    if (!is_ray) throw Error(ErrorCode::kInvalidArgument, "point " + ray_label(point) + " is outside the fan");
  }
  res.fan.cones = std::move(cones);
  res.cone_origin = std::move(origin);
  canonicalize(res);
}

Resolution resolve_fan(const Fan& fan) {
  if (fan.rank > kMaxResolveRank) {
    throw Error(ErrorCode::kRankCapExceeded,
                "rank " + std::to_string(fan.rank) + " exceeds " +
                    std::to_string(kMaxResolveRank));
  }
  validate_fan(fan);
  return resolve_fan(simplicialize(fan));
}

Resolution resolve_fan(Resolution res) {
  if (res.fan.rank > kMaxResolveRank) {
    throw Error(ErrorCode::kRankCapExceeded,
                "rank " + std::to_string(res.fan.rank) + " exceeds " +
                    std::to_string(kMaxResolveRank));
  }
  if (res.fan.rank == 2) {
    std::vector<Cone> cones;
    std::vector<std::size_t> origin;
    for (std::size_t c = 0; c < res.fan.cones.size(); ++c) {
      const Cone cone = res.fan.cones[c];
      if (cone.size() < 2) {
        cones.push_back(cone);
        origin.push_back(res.cone_origin[c]);
        continue;
      }
      const auto chain = hirzebruch_jung_chain(res.fan.rays[cone[0]], res.fan.rays[cone[1]]);
      std::size_t prev = cone[0];
      for (const auto& w : chain) {
        const auto idx = find_or_add_ray(res, w, res.cone_origin[c], "hirzebruch-jung");
        cones.push_back({prev, idx});
        origin.push_back(res.cone_origin[c]);
        prev = idx;
      }
      cones.push_back({prev, cone[1]});
      origin.push_back(res.cone_origin[c]);
    }
    for (auto& c : cones) std::sort(c.begin(), c.end());
    res.fan.cones = std::move(cones);
    res.cone_origin = std::move(origin);
    canonicalize(res);
    return res;
  }
  for (;;) {
    std::optional<std::size_t> bad;
    for (std::size_t c = 0; c < res.fan.cones.size() && !bad; ++c) {
      if (!is_smooth_cone(res.fan, res.fan.cones[c])) bad = c;
    }
    if (!bad) return res;
    const auto gens = generators(res.fan, res.fan.cones[*bad]);
    const IntVec p = shortest_parallelepiped_point(gens, multiplicity(gens));
    stellar_subdivide(res, p, "stellar");
  }
}

Rational PLDivisor::evaluate_on_cone(std::size_t cone, const IntVec& point) const {
  return dot(functionals.at(cone), point);
}

PLDivisor pl_function(const Fan& fan, const RatVec& ray_values,
                      const std::vector<PointConstraint>& extra) {
  if (ray_values.size() != fan.rays.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one value per ray is required");
  }
  const auto r = static_cast<std::size_t>(fan.rank);
  PLDivisor psi;
  psi.ray_values = ray_values;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    linalg::Matrix rows;
    RatVec rhs;
    for (auto i : fan.cones[c]) {
      rows.push_back(to_rational(fan.rays[i]));
      rhs.push_back(ray_values[i]);
    }
    for (const auto& pc : extra) {
      if (std::find(pc.cones.begin(), pc.cones.end(), c) == pc.cones.end()) continue;
      rows.push_back(to_rational(pc.point));
      rhs.push_back(pc.value);
    }
    auto x = linalg::solve(rows, rhs, r);
    if (!x) {
      throw Error(ErrorCode::kNotQCartier,
                  "no linear function on cone " + std::to_string(c) +
                      " matches the prescribed values");
    }
    psi.functionals.push_back(std::move(*x));
  }
  // Shared rays must receive the same value from every cone containing them.
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    for (auto i : fan.cones[c]) {
      if (psi.evaluate_on_cone(c, fan.rays[i]) != ray_values[i]) {
        throw Error(ErrorCode::kNotQCartier, "inconsistent value on ray " + ray_label(fan.rays[i]));
      }
    }
  }
  return psi;
}

std::optional<Rational> evaluate(const Fan& fan, const PLDivisor& psi,
                                 const IntVec& point) {
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    if (h_representation(generators(fan, fan.cones[c]), fan.rank).contains(point)) {
      return psi.evaluate_on_cone(c, point);
    }
  }
  return std::nullopt;
}

std::string ray_label(const IntVec& ray) {
  std::string out = "(";
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ray[i]);
  }
  return out + ")";
}

ToricLedger toric_discrepancies(const Fan& fan, const Resolution& resolved,
                                const ToricBoundary& d) {
  if (d.coefficients.size() != fan.rays.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one boundary coefficient per ray is required");
  }
  RatVec values;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const Rational& di = d.coefficients[i];
    if (di < 0 || di > 1) {
      throw Error(ErrorCode::kCoefficientOutOfRange,
                  "d on ray " + ray_label(fan.rays[i]) + " = " + to_string(di));
    }
    values.push_back(1 - di);
  }
  return toric_discrepancies(pl_function(fan, values), resolved);
}

ToricLedger toric_discrepancies(const PLDivisor& psi, const Resolution& resolved) {
  ToricLedger ledger;
  for (const auto& v : psi.ray_values) {
    if (v <= 0) ledger.strictly_effective = false;
  }
  for (const auto& nr : resolved.provenance) {
    const IntVec& ray = resolved.fan.rays[nr.ray];
    const Rational value = psi.evaluate_on_cone(nr.source_cone, ray);
    if (value <= 0) ledger.strictly_effective = false;
    ledger.entries.push_back({"Y" + ray_label(ray), ray, nr.source_cone, value - 1});
  }
  return ledger;
}

}  // namespace kltcalc::toric
