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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kltcalc/flag.hpp"
#include "kltcalc/horo.hpp"
#include "kltcalc/oracle.hpp"
#include "kltcalc/rational.hpp"
#include "kltcalc/roots.hpp"
#include "kltcalc/toric.hpp"

// JSON readers and writers. Rationals are written as strings ("-1/2", "3");
// readers accept JSON integers or such strings and reject floats. Objects
// keep insertion order so output is byte-stable.
namespace kltcalc::json_io {

using Json = nlohmann::ordered_json;

// Throws kParse on malformed text.
Json parse(std::string_view text);
// Two-space indent, trailing newline.
std::string dump(const Json& j);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
IntVec int_vector_from_json(const Json& j);

// {rank, rays, cones, d?}
struct FanInput {
  toric::Fan fan;
  std::optional<toric::ToricBoundary> d;
};
FanInput fan_from_json(const Json& j);
Json fan_to_json(const toric::Fan& fan);

RootSystemSpec root_system_from_json(const Json& j);

// {root_system, parabolic_I, fan, colors, d_G, d_B}. Missing d_G falls back
// to fan.d, then to zeros; missing d_B keys mean 0.
horo::HorosphericalPair pair_from_json(const Json& j);

// [{divisor, beta, discrepancy, exceptional}]; beta in the simple-root basis.
Json bs_ledger_to_json(const RootDatum& datum, const flag::BSLedger& ledger);
// [{divisor, ray, source_cone, discrepancy}]
Json toric_ledger_to_json(const toric::ToricLedger& ledger);
// {fan, provenance: [{ray, vector, source_cone, reason}]}
Json resolution_to_json(const toric::Resolution& res);
Json horo_ledger_to_json(const RootDatum& datum, const horo::HoroLedger& ledger);
Json horo_verdict_to_json(const RootDatum& datum, const horo::HoroVerdict& verdict);
Json sweep_to_json(const oracle::SweepReport& report);

}  // namespace kltcalc::json_io
