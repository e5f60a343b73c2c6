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
#include <optional>
#include <string>
#include <vector>

#include "kltcalc/rational.hpp"

// Lattice fans, piecewise-linear support functions, smooth subdivisions and
// toric discrepancy ledgers.
namespace kltcalc::toric {

// Largest lattice rank handled by resolve_fan and by pairwise intersection
// validation.
inline constexpr int kMaxResolveRank = 4;

using Cone = std::vector<std::size_t>;  // indices into Fan::rays

struct Fan {
  int rank = 0;
  std::vector<IntVec> rays;  // primitive, nonzero, distinct
  std::vector<Cone> cones;   // maximal cones

  friend bool operator==(const Fan&, const Fan&) = default;
};

// Throws kInvalidFan. Returns whether pairwise cone intersections were
// checked to be common faces (only done up to kMaxResolveRank).
bool validate_fan(const Fan& fan);

std::vector<IntVec> generators(const Fan& fan, const Cone& cone);

// Dimension of the linear span of the generators.
std::size_t cone_dimension(const std::vector<IntVec>& gens, int rank);
bool is_simplicial(const Fan& fan, const Cone& cone);

// Index of the sublattice spanned by the generators inside the saturated
// lattice of their span. Requires linearly independent generators.
std::int64_t multiplicity(const std::vector<IntVec>& gens);

// Throws kNonSimplicial for a non-simplicial cone.
bool is_smooth_cone(const Fan& fan, const Cone& cone);

// { x : inequalities . x >= 0, equalities . x = 0 }.
struct HRep {
  std::vector<RatVec> inequalities;
  std::vector<RatVec> equalities;

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;
};

HRep h_representation(const std::vector<IntVec>& gens, int rank);

// Facets as index sets into `gens`.
std::vector<std::vector<std::size_t>> facets(const std::vector<IntVec>& gens,
                                             int rank);

// Primitive extreme rays of a pointed cone given by inequalities.
std::vector<IntVec> extreme_rays(const HRep& h, int rank);

struct NewRay {
  std::size_t ray = 0;          // index in the resolved fan
  std::size_t source_cone = 0;  // input cone containing it
  std::string reason;           // "hirzebruch-jung", "stellar", ...
};

struct Resolution {
  Fan fan;                             // input rays keep their indices
  std::vector<NewRay> provenance;      // one per ray not in the input
  std::vector<std::size_t> cone_origin;  // input cone of each output cone
};

// Splits every non-simplicial cone with a pulling triangulation (global ray
// order), adding no rays.
Resolution simplicialize(const Fan& fan);

// Star subdivision of a simplicial fan at a lattice point lying in the
// support. The point becomes a new ray unless it is already one.
void stellar_subdivide(Resolution& res, const IntVec& point,
                       const std::string& reason);

// Smooth refinement: Hirzebruch-Jung chains in rank 2, iterated stellar
// subdivision at shortest parallelepiped points in rank 3 and 4.
// Throws kRankCapExceeded above rank 4, kInvalidFan on bad input.
Resolution resolve_fan(const Fan& fan);
// Same, starting from an already simplicial working state.
Resolution resolve_fan(Resolution start);

// Extra interpolation condition psi(point) = value on the listed cones.
struct PointConstraint {
  IntVec point;
  Rational value;
  std::vector<std::size_t> cones;
};

struct PLDivisor {
  std::vector<RatVec> functionals;  // one per cone of the fan
  RatVec ray_values;

  Rational evaluate_on_cone(std::size_t cone, const IntVec& point) const;
};

// Solves functional(v) = value on each cone. Throws kNotQCartier naming the
// first cone whose system is inconsistent.
PLDivisor pl_function(const Fan& fan, const RatVec& ray_values,
                      const std::vector<PointConstraint>& extra = {});

// Value at a point of the support, nullopt outside it.
std::optional<Rational> evaluate(const Fan& fan, const PLDivisor& psi,
                                 const IntVec& point);

// Coefficient d_i per ray of the input fan.
struct ToricBoundary {
  RatVec coefficients;
};

struct ToricEntry {
  std::string divisor;
  IntVec ray;
  std::size_t source_cone = 0;
  Rational discrepancy;
};

struct ToricLedger {
  std::vector<ToricEntry> entries;  // new rays only
  bool strictly_effective = true;   // psi > 0 on every resolved ray
};

std::string ray_label(const IntVec& ray);

// psi has ray values 1 - d_i, i.e. it is the support function of -K - D.
ToricLedger toric_discrepancies(const Fan& fan, const Resolution& resolved,
                                const ToricBoundary& d);
ToricLedger toric_discrepancies(const PLDivisor& psi,
                                const Resolution& resolved);

}  // namespace kltcalc::toric
