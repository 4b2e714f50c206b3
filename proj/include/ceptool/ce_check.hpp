// Copyright 2026 The ceptool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEPTOOL_CE_CHECK_HPP_
#define CEPTOOL_CE_CHECK_HPP_

#include <optional>
#include <string>

#include "ceptool/measures.hpp"

namespace ceptool {

// Which density the projections integrate against mu.
enum class Integrand {
  kXY,        // x * y on both axes
  kOpponent,  // y for the x-projection, x for the y-projection
};

// Marginal projections of a density times mu onto each axis.
struct ProjectionPair {
  SignedFiniteMeasure kx;
  SignedFiniteMeasure ky;

  bool is_zero() const { return kx.is_zero() && ky.is_zero(); }
};

ProjectionPair Projections(const FiniteMeasure& mu, Integrand integrand);

// A profitable unilateral deviation, or a nonzero projection atom.
struct CeWitness {
  std::string description;
};

struct CeVerdict {
  bool is_equilibrium = false;
  std::optional<CeWitness> witness;  // set iff !is_equilibrium
};

// Deviation-sum test: for every recommended x and alternative x',
// sum_y mu(x,y) (x y - x' y) >= 0, and symmetrically for y.
// Throws InputError if an atom lies outside C_X x C_Y.
CeVerdict CheckCeDefinition(const FiniteGame& game, const FiniteMeasure& mu);
bool IsCeDefinition(const FiniteGame& game, const FiniteMeasure& mu);

// Projection test: both x*y projections vanish. Only valid when no atom has
// x*y = 0; such atoms raise HypothesisError and the caller must use the
// deviation-sum test instead.
CeVerdict CheckCeProjection(const FiniteGame& game, const FiniteMeasure& mu);
bool IsCeProjection(const FiniteGame& game, const FiniteMeasure& mu);

}  // namespace ceptool

#endif  // CEPTOOL_CE_CHECK_HPP_
