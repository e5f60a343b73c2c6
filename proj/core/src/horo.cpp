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

#include "kltcalc/horo.hpp"

#include <algorithm>
#include <set>

#include "kltcalc/error.hpp"
#include "kltcalc/linalg.hpp"

namespace kltcalc::horo {

namespace {

IntVec unit(std::size_t n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

struct Geometry {
  toric::Fan fan;
  std::vector<ColorRay> colors;     // parallel to ColoredFan::colors
  std::vector<IntVec> directions;   // primitive image directions
};

ColorPlacement classify(const toric::Fan& fan, const toric::Cone& cone,
                        const IntVec& direction) {
  const auto gens = toric::generators(fan, cone);
  if (std::find(gens.begin(), gens.end(), direction) != gens.end()) {
    return ColorPlacement::kOnRay;
  }
  if (!gens.empty() &&
      toric::h_representation(gens, fan.rank).contains(direction)) {
    return ColorPlacement::kInterior;
  }
  return ColorPlacement::kEdge;
}

Geometry build_geometry(const ColoredFan& cf) {
  Geometry g;
  g.fan = cf.fan;
  for (const auto& color : cf.colors) {
    ColorRay cr{color.alpha, ColorPlacement::kUnused, std::nullopt};
    const IntVec dir = linalg::primitive(color.point);
    g.directions.push_back(dir);
    if (!color.cones.empty()) {
      std::set<ColorPlacement> kinds;
      for (auto c : color.cones) kinds.insert(classify(cf.fan, cf.fan.cones[c], dir));
      if (kinds.size() != 1) {
        throw Error(ErrorCode::kUnsupported,
                    "color " + simple_root_name(color.alpha) +
                        " sits differently in its incident cones");
      }
      cr.placement = *kinds.begin();
    }
    if (cr.placement == ColorPlacement::kOnRay ||
        cr.placement == ColorPlacement::kEdge) {
      auto it = std::find(g.fan.rays.begin(), g.fan.rays.end(), dir);
      std::size_t idx = static_cast<std::size_t>(it - g.fan.rays.begin());
      if (it == g.fan.rays.end()) g.fan.rays.push_back(dir);
      cr.ray = idx;
      for (auto c : color.cones) {
        auto& cone = g.fan.cones[c];
        if (std::find(cone.begin(), cone.end(), idx) == cone.end()) cone.push_back(idx);
      }
    }
    g.colors.push_back(cr);
  }
  toric::validate_fan(g.fan);
  return g;
}

const Color* first_color_on_ray(const ColoredFan& cf, const Geometry& g,
                                std::size_t ray) {
  for (std::size_t k = 0; k < cf.colors.size(); ++k) {
    if (g.colors[k].ray == ray) return &cf.colors[k];
  }
  return nullptr;
}

}  // namespace

std::string entry_kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::kToricExceptional: return "toric-exceptional";
    case EntryKind::kToricStrictTransform: return "toric-strict-transform";
    case EntryKind::kFlag: return "flag";
  }
  return "unknown";
}

void validate_pair(const HorosphericalPair& pair) {
  const auto& cf = pair.colored_fan;
  toric::validate_fan(cf.fan);
  if (pair.d_G.coefficients.size() != cf.fan.rays.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "d_G needs one coefficient per ray (" +
                    std::to_string(cf.fan.rays.size()) + ")");
  }
  for (const auto& d : pair.d_G.coefficients) {
    if (d < 0 || d > 1) {
      throw Error(ErrorCode::kCoefficientOutOfRange, "d_G value " + to_string(d));
    }
  }
  flag::validate_boundary(pair.parab, pair.d_B);
  std::set<int> alphas;
  for (const auto& color : cf.colors) {
    if (!std::binary_search(pair.parab.complement.begin(),
                            pair.parab.complement.end(), color.alpha)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + simple_root_name(color.alpha) + " is not in S \\ I");
    }
    if (!alphas.insert(color.alpha).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + simple_root_name(color.alpha) + " listed twice");
    }
    if (color.point.size() != static_cast<std::size_t>(cf.fan.rank) ||
        linalg::content(color.point) == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + simple_root_name(color.alpha) +
                      " needs a nonzero lattice point");
    }
    for (auto c : color.cones) {
      if (c >= cf.fan.cones.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "color " + simple_root_name(color.alpha) + " names a missing cone");
      }
    }
  }
}

Anticanonical anticanonical_horospherical(const HorosphericalPair& pair) {
  Anticanonical a;
  a.ray_coefficients.assign(pair.colored_fan.fan.rays.size(), Rational(1));
  for (int alpha : pair.parab.complement) {
    a.flag_part.emplace(alpha, pairing(pair.datum, pair.parab.two_rho_superP,
                                       unit(pair.datum.rank(), alpha)));
  }
  return a;
}

ToroidalResolution toroidal_resolution(const HorosphericalPair& pair) {
  validate_pair(pair);
  const auto& cf = pair.colored_fan;
  const Geometry g = build_geometry(cf);

  ToroidalResolution out;
  out.geometric = g.fan;
  toric::Resolution res = toric::simplicialize(g.fan);
  for (std::size_t k = 0; k < cf.colors.size(); ++k) {
    if (g.colors[k].placement == ColorPlacement::kInterior) {
      toric::stellar_subdivide(res, g.directions[k],
                               "color " + simple_root_name(cf.colors[k].alpha));
    }
  }
  res = toric::resolve_fan(std::move(res));

  // Edge colors became rays before the resolution started; list them too.
  for (std::size_t ray = cf.fan.rays.size(); ray < g.fan.rays.size(); ++ray) {
    const Color* color = first_color_on_ray(cf, g, ray);
    res.provenance.push_back(
        {ray, color->cones.front(), "color " + simple_root_name(color->alpha)});
  }
  std::sort(res.provenance.begin(), res.provenance.end(),
            [](const toric::NewRay& a, const toric::NewRay& b) { return a.ray < b.ray; });

  for (std::size_t k = 0; k < cf.colors.size(); ++k) {
    ColorRay cr = g.colors[k];
    if (cr.placement == ColorPlacement::kInterior) {
      auto it = std::find(res.fan.rays.begin(), res.fan.rays.end(), g.directions[k]);
      cr.ray = static_cast<std::size_t>(it - res.fan.rays.begin());
    }
    out.colors.push_back(cr);
  }
  out.resolved = std::move(res);
  return out;
}

std::optional<Rational> DiscrepancyLedger::min_discrepancy() const {
  std::optional<Rational> m;
  for (const auto& e : entries) {
    if (!m || e.discrepancy < *m) m = e.discrepancy;
  }
  return m;
}

HoroLedger horospherical_discrepancies(const HorosphericalPair& pair) {
  validate_pair(pair);
  const auto& cf = pair.colored_fan;
  const Geometry g = build_geometry(cf);
  for (std::size_t k = 0; k < cf.colors.size(); ++k) {
    if (g.colors[k].placement == ColorPlacement::kInterior) {
      throw Error(ErrorCode::kUnsupported,
                  "color " + simple_root_name(cf.colors[k].alpha) +
                      " lies inside a colored cone instead of on an edge");
    }
  }
  const Anticanonical anti = anticanonical_horospherical(pair);

  // Support function of -K_X - D: 1 - d_i on rays, a_alpha - d_alpha at the
  // color images.
  RatVec values;
  for (const auto& d : pair.d_G.coefficients) values.push_back(1 - d);
  std::vector<toric::PointConstraint> constraints;
  for (std::size_t k = 0; k < cf.colors.size(); ++k) {
    const Color& color = cf.colors[k];
    if (g.colors[k].placement == ColorPlacement::kUnused) continue;
    const Rational value = anti.flag_part.at(color.alpha) - pair.d_B.at(color.alpha);
    constraints.push_back({color.point, value, color.cones});
  }
  for (std::size_t ray = cf.fan.rays.size(); ray < g.fan.rays.size(); ++ray) {
    const Color* color = first_color_on_ray(cf, g, ray);
    const Rational scale(static_cast<long>(linalg::content(color->point)));
    values.push_back((anti.flag_part.at(color->alpha) - pair.d_B.at(color->alpha)) / scale);
  }
  const toric::PLDivisor psi = toric::pl_function(g.fan, values, constraints);

  HoroLedger out;
  out.resolution = toroidal_resolution(pair);
  out.toric = toric::toric_discrepancies(psi, out.resolution.resolved);
  out.flag = flag::flag_discrepancies(pair.datum, pair.parab, pair.d_B);
  out.strictly_effective = out.toric.strictly_effective;
  for (int alpha : pair.parab.complement) {
    if (anti.flag_part.at(alpha) - pair.d_B.at(alpha) <= 0) out.strictly_effective = false;
  }

  for (const auto& e : out.toric.entries) {
    out.ledger.entries.push_back(
        {e.divisor, EntryKind::kToricExceptional, e.discrepancy, e.ray, std::nullopt});
  }
  for (std::size_t i = 0; i < cf.fan.rays.size(); ++i) {
    out.ledger.entries.push_back({"X" + std::to_string(i + 1),
                                  EntryKind::kToricStrictTransform,
                                  -pair.d_G.coefficients[i], cf.fan.rays[i],
                                  std::nullopt});
  }
  for (const auto& e : out.flag.entries) {
    out.ledger.entries.push_back({e.divisor, EntryKind::kFlag, e.discrepancy, {}, e.beta});
  }
  return out;
}

HoroVerdict is_klt_horospherical(const HorosphericalPair& pair) {
  HoroVerdict v;
  for (const auto& d : pair.d_G.coefficients) {
    if (d >= 1) v.floor_is_zero = false;
  }
  for (const auto& [alpha, d] : pair.d_B.coefficients) {
    if (d >= 1) v.floor_is_zero = false;
  }
  v.ledger = horospherical_discrepancies(pair);
  v.ledger_min = v.ledger.ledger.min_discrepancy();
  v.klt = v.floor_is_zero;
  const bool ledger_klt = !v.ledger_min || *v.ledger_min > -1;
  v.consistency_failure = ledger_klt != v.floor_is_zero;
  return v;
}

}  // namespace kltcalc::horo
