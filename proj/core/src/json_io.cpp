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

#include "kltcalc/json_io.hpp"

#include <set>

#include "kltcalc/error.hpp"

namespace kltcalc::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer_from_json(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::size_t index_from_json(const Json& j) {
  const auto v = integer_from_json(j);
  if (v < 0) bad("negative index " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

Json int_vector_to_json(const IntVec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

IntVec int_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  IntVec out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

FanInput fan_from_json(const Json& j) {
  FanInput in;
  const auto rank = integer_from_json(field(j, "rank"));
  if (rank < 0) bad("negative rank");
  in.fan.rank = static_cast<int>(rank);
  const Json& rays = field(j, "rays");
  if (!rays.is_array()) bad("'rays' must be an array");
  for (const auto& r : rays) in.fan.rays.push_back(int_vector_from_json(r));
  const Json& cones = field(j, "cones");
  if (!cones.is_array()) bad("'cones' must be an array");
  for (const auto& c : cones) {
    if (!c.is_array()) bad("each cone must be an array of ray indices");
    toric::Cone cone;
    for (const auto& i : c) cone.push_back(index_from_json(i));
    in.fan.cones.push_back(std::move(cone));
  }
  if (auto it = j.find("d"); it != j.end()) {
    if (!it->is_array()) bad("'d' must be an array");
    toric::ToricBoundary d;
    for (const auto& x : *it) d.coefficients.push_back(rational_from_json(x));
    in.d = std::move(d);
  }
  return in;
}

Json fan_to_json(const toric::Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(int_vector_to_json(r));
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json cj = Json::array();
    for (auto i : c) cj.push_back(i);
    cones.push_back(std::move(cj));
  }
  Json out;
  out["rank"] = fan.rank;
  out["rays"] = std::move(rays);
  out["cones"] = std::move(cones);
  return out;
}

RootSystemSpec root_system_from_json(const Json& j) {
  if (j.is_string()) return RootSystemSpec::parse(j.get<std::string>());
  if (j.is_array()) {
    CartanMatrix m;
    for (const auto& row : j) {
      std::vector<int> r;
      for (auto x : int_vector_from_json(row)) r.push_back(static_cast<int>(x));
      m.push_back(std::move(r));
    }
    return RootSystemSpec::from_cartan(std::move(m));
  }
  bad("'root_system' must be a type string or an integer matrix");
}

horo::HorosphericalPair pair_from_json(const Json& j) {
  horo::HorosphericalPair pair;
  pair.datum = RootDatum::build(root_system_from_json(field(j, "root_system")));
  const auto rank = pair.datum.rank();

  std::vector<int> levi;
  if (auto it = j.find("parabolic_I"); it != j.end()) {
    if (!it->is_array()) bad("'parabolic_I' must be an array of root names");
    for (const auto& name : *it) {
      if (!name.is_string()) bad("root names must be strings");
      levi.push_back(parse_simple_root(name.get<std::string>(), rank));
    }
  }
  pair.parab = parabolic(pair.datum, std::move(levi));

  FanInput fan = fan_from_json(field(j, "fan"));
  pair.colored_fan.fan = std::move(fan.fan);

  if (auto it = j.find("colors"); it != j.end()) {
    if (!it->is_array()) bad("'colors' must be an array");
    for (const auto& c : *it) {
      horo::Color color;
      const Json& alpha = field(c, "alpha");
      if (!alpha.is_string()) bad("color alpha must be a root name");
      color.alpha = parse_simple_root(alpha.get<std::string>(), rank);
      color.point = int_vector_from_json(field(c, "point"));
      if (auto cones = c.find("cones"); cones != c.end()) {
        if (!cones->is_array()) bad("color cones must be an array");
        for (const auto& i : *cones) color.cones.push_back(index_from_json(i));
      }
      pair.colored_fan.colors.push_back(std::move(color));
    }
  }

  if (auto it = j.find("d_G"); it != j.end()) {
    if (!it->is_array()) bad("'d_G' must be an array");
    for (const auto& x : *it) pair.d_G.coefficients.push_back(rational_from_json(x));
  } else if (fan.d) {
    pair.d_G = *fan.d;
  } else {
    pair.d_G.coefficients.assign(pair.colored_fan.fan.rays.size(), Rational(0));
  }

  if (auto it = j.find("d_B"); it != j.end()) {
    if (!it->is_object()) bad("'d_B' must be an object keyed by root name");
    for (const auto& [name, value] : it->items()) {
      pair.d_B.coefficients[parse_simple_root(name, rank)] = rational_from_json(value);
    }
  }
  return pair;
}

Json bs_ledger_to_json(const RootDatum& datum, const flag::BSLedger& ledger) {
  Json out = Json::array();
  for (const auto& e : ledger.entries) {
    Json ej;
    ej["divisor"] = e.divisor;
    ej["beta"] = int_vector_to_json(datum.positive_roots()[e.beta]);
    ej["discrepancy"] = to_json(e.discrepancy);
    ej["exceptional"] = e.exceptional;
    out.push_back(std::move(ej));
  }
  return out;
}

Json toric_ledger_to_json(const toric::ToricLedger& ledger) {
  Json out = Json::array();
  for (const auto& e : ledger.entries) {
    Json ej;
    ej["divisor"] = e.divisor;
    ej["ray"] = int_vector_to_json(e.ray);
    ej["source_cone"] = e.source_cone;
    ej["discrepancy"] = to_json(e.discrepancy);
    out.push_back(std::move(ej));
  }
  return out;
}

Json resolution_to_json(const toric::Resolution& res) {
  Json prov = Json::array();
  for (const auto& p : res.provenance) {
    Json pj;
    pj["ray"] = p.ray;
    pj["vector"] = int_vector_to_json(res.fan.rays[p.ray]);
    pj["source_cone"] = p.source_cone;
    pj["reason"] = p.reason;
    prov.push_back(std::move(pj));
  }
  Json out;
  out["fan"] = fan_to_json(res.fan);
  out["provenance"] = std::move(prov);
  return out;
}

Json horo_ledger_to_json(const RootDatum& datum, const horo::HoroLedger& ledger) {
  Json entries = Json::array();
  for (const auto& e : ledger.ledger.entries) {
    Json ej;
    ej["divisor"] = e.divisor;
    ej["kind"] = horo::entry_kind_name(e.kind);
    if (e.beta) {
      ej["beta"] = int_vector_to_json(datum.positive_roots()[*e.beta]);
    } else {
      ej["ray"] = int_vector_to_json(e.ray);
    }
    ej["discrepancy"] = to_json(e.discrepancy);
    entries.push_back(std::move(ej));
  }
  Json out;
  out["entries"] = std::move(entries);
  out["resolution"] = resolution_to_json(ledger.resolution.resolved);
  out["strictly_effective"] = ledger.strictly_effective;
  return out;
}

Json horo_verdict_to_json(const RootDatum& datum, const horo::HoroVerdict& verdict) {
  Json out;
  out["klt"] = verdict.klt;
  out["floor_is_zero"] = verdict.floor_is_zero;
  out["ledger_min"] = verdict.ledger_min ? to_json(*verdict.ledger_min) : Json(nullptr);
  out["consistency_failure"] = verdict.consistency_failure;
  out["ledger"] = horo_ledger_to_json(datum, verdict.ledger);
  return out;
}

Json sweep_to_json(const oracle::SweepReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json levi = Json::array();
    for (int a : c.levi) levi.push_back(simple_root_name(a));
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(int_vector_to_json(w));
    Json cj;
    cj["type"] = c.type;
    cj["I"] = std::move(levi);
    cj["min_value"] = to_json(c.min_value);
    cj["witnesses"] = std::move(witnesses);
    cj["inequality"] = c.inequality;
    cj["reformulation"] = c.reformulation;
    cj["longest_element_route"] = c.longest_element_route;
    cj["levi_identity"] = c.levi_identity;
    cj["equality_characterization"] = c.equality_characterization;
    cj["beta_sets"] = c.beta_sets;
    cj["word_independence"] = c.word_independence;
    cj["klt_criterion"] = c.klt_criterion;
    cj["words_checked"] = c.words_checked;
    cj["words_exhaustive"] = c.words_exhaustive;
    cj["boundaries_checked"] = c.boundaries_checked;
    cj["passed"] = c.passed();
    cells.push_back(std::move(cj));
  }
  Json out;
  out["cells"] = std::move(cells);
  out["failures"] = report.failures();
  out["passed"] = report.passed();
  return out;
}

}  // namespace kltcalc::json_io
