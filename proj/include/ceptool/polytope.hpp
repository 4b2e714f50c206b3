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

#ifndef CEPTOOL_POLYTOPE_HPP_
#define CEPTOOL_POLYTOPE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ceptool/linalg.hpp"
#include "ceptool/measures.hpp"

namespace ceptool {

// coeffs . z >= rhs (inequality) or coeffs . z == rhs (equality).
struct LinearRow {
  RationalVector coeffs;
  Rational rhs;
};

struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equalities;
};

struct VertexSet {
  std::vector<RationalVector> vertices;  // sorted, duplicate-free
};

struct VertexEnumeration {
  bool feasible = false;
  VertexSet vertex_set;
};

// Coordinates of a measure on C_X x C_Y: index i * |C_Y| + j holds the
// weight at (cx[i], cy[j]).
RationalVector MeasureToCoordinates(const FiniteGame& game,
                                    const FiniteMeasure& mu);
FiniteMeasure CoordinatesToMeasure(const FiniteGame& game,
                                   const RationalVector& z);

// Proper correlated equilibria of `game` as a polytope. Deviation rows come
// first (player X then Y, each in lexicographic (recommended, alternative)
// order), then one nonnegativity row per coordinate; the single equality
// fixes the total mass to 1.
HPolytope CeHRep(const FiniteGame& game);

// Exact vertex enumeration by the double description method on the
// homogenized cone, starting from the nonnegative orthant and inserting the
// equalities and then the inequalities in row order. Requires a bounded
// polytope with a nonnegativity row for every coordinate (InputError
// otherwise). Reports infeasibility through `feasible`.
VertexEnumeration EnumerateVertices(const HPolytope& p);

// Independent checks of a vertex list: every vertex satisfies all rows and
// its tight rows have rank `dim`; for every pair, combinatorial adjacency (no
// third vertex tight on all their common rows) agrees with the algebraic
// edge test (common tight rows of rank dim - 1). Returns an empty string on
// success, otherwise a description of the first failure. The pair check is
// quadratic in the vertex count.
std::string VerifyVertexSet(const HPolytope& p, const VertexSet& vs,
                            bool check_adjacency);

struct VertexClassification {
  std::vector<std::size_t> product;  // products of extreme Nash pairs
  std::vector<std::size_t> cycle;    // cycle measures that are not products
  std::vector<std::size_t> other;
};

VertexClassification ClassifyVertices(const FiniteGame& game,
                                      const VertexSet& vs);

}  // namespace ceptool

#endif  // CEPTOOL_POLYTOPE_HPP_
