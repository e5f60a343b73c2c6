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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kltcalc/flag.hpp"
#include "kltcalc/rational.hpp"
#include "kltcalc/roots.hpp"
#include "kltcalc/toric.hpp"

// Composite discrepancy ledgers of B-stable pairs on horospherical
// varieties: a toroidal resolution followed by a Bott-Samelson resolution of
// the flag base.
namespace kltcalc::horo {

// A color D_alpha with its image in the lattice N and the colored cones it
// belongs to. A colored cone is generated by its rays together with the
// images of its colors.
struct Color {
  int alpha = 0;
  IntVec point;
  std::vector<std::size_t> cones;
};

struct ColoredFan {
  toric::Fan fan;
  std::vector<Color> colors;
};

struct HorosphericalPair {
  RootDatum datum;
  ParabolicData parab;
  ColoredFan colored_fan;
  toric::ToricBoundary d_G;  // one coefficient per ray (G-stable divisor)
  flag::FlagBoundary d_B;    // one coefficient per alpha in S \ I
};

// Throws kInvalidFan, kInvalidArgument or kCoefficientOutOfRange.
void validate_pair(const HorosphericalPair& pair);

struct Anticanonical {
  RatVec ray_coefficients;            // all 1
  std::map<int, Rational> flag_part;  // a_alpha = <2 rho^P, alpha^vee>
};

Anticanonical anticanonical_horospherical(const HorosphericalPair& pair);

// Where each color ends up in the geometric fan.
enum class ColorPlacement {
  kUnused,    // no incident cones
  kOnRay,     // image direction is already a ray of an incident cone
  kEdge,      // image spans a new extremal ray of its colored cones
  kInterior,  // image lies inside the cone spanned by the other generators
};

struct ColorRay {
  int alpha = 0;
  ColorPlacement placement = ColorPlacement::kUnused;
  std::optional<std::size_t> ray;  // index in the resolved fan
};

struct ToroidalResolution {
  // Fan of the colored cones with edge colors turned into rays; ray and
  // cone indices extend those of the input fan.
  toric::Fan geometric;
  // Smooth fan containing every ray and every color image as an edge.
  // Provenance lists every ray that is not a ray of the input fan.
  toric::Resolution resolved;
  std::vector<ColorRay> colors;
};

ToroidalResolution toroidal_resolution(const HorosphericalPair& pair);

enum class EntryKind {
  kToricExceptional,     // Z x^P Y_i, Y_i over a new ray
  kToricStrictTransform, // Z x^P Y_i, Y_i over a ray of X
  kFlag,                 // F_i x^P Y
};

std::string entry_kind_name(EntryKind kind);

struct LedgerEntry {
  std::string divisor;
  EntryKind kind = EntryKind::kFlag;
  Rational discrepancy;
  IntVec ray;                        // toric entries
  std::optional<std::size_t> beta;   // flag entries
};

struct DiscrepancyLedger {
  std::vector<LedgerEntry> entries;

  std::optional<Rational> min_discrepancy() const;
};

struct HoroLedger {
  DiscrepancyLedger ledger;
  toric::ToricLedger toric;
  flag::BSLedger flag;
  ToroidalResolution resolution;
  bool strictly_effective = true;  // f*(-K_X - D) positive on every ray
};

// Throws kNotQCartier when -K_X - D has no support function, kUnsupported
// when a color image lies inside a colored cone rather than on an edge.
HoroLedger horospherical_discrepancies(const HorosphericalPair& pair);

struct HoroVerdict {
  bool floor_is_zero = true;
  std::optional<Rational> ledger_min;  // nullopt for an empty ledger
  bool klt = true;                     // equals floor_is_zero
  bool consistency_failure = false;    // ledger disagrees with floor_is_zero
  HoroLedger ledger;
};

HoroVerdict is_klt_horospherical(const HorosphericalPair& pair);

}  // namespace kltcalc::horo
