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

#ifndef CEPTOOL_MOMENTS_HPP_
#define CEPTOOL_MOMENTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceptool/cycles.hpp"
#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool {

// x^p y^q.
struct Monomial {
  unsigned p = 0;
  unsigned q = 0;

  Rational operator()(const Point& pt) const;
  std::string ToString() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class MomentBasis {
 public:
  // Throws InputError when empty.
  explicit MomentBasis(std::vector<Monomial> maps);

  // Comma-separated monomials such as "1,x,y,xy,x^2y,y^3".
  static MomentBasis Parse(std::string_view text);

  // The first d monomials in graded lexicographic order:
  // 1, x, y, x^2, xy, y^2, x^3, ...
  static MomentBasis GradedLex(std::size_t d);

  std::size_t size() const { return maps_.size(); }
  const std::vector<Monomial>& maps() const { return maps_; }
  std::string ToString() const;

 private:
  std::vector<Monomial> maps_;
};

std::vector<Rational> MomentsOf(const FiniteMeasure& mu,
                                const MomentBasis& basis);

struct MomentSplit {
  // No moment-preserving direction exists: the matrix
  // G[j][i] = g_j(p_i) mu(p_i) has trivial null space.
  bool extreme_for_basis = false;
  // The only direction rescales mu (every moment of mu is zero), so the
  // split is mu1 = 2 mu, mu2 = 0.
  bool degenerate = false;
  FiniteMeasure mu1;
  FiniteMeasure mu2;
};

// Finds v with G v = 0, preferring a direction not parallel to (1, ..., 1),
// and steps symmetrically to the nearer nonnegativity boundary:
// mu1 = mu (1 + t v), mu2 = mu (1 - t v). Then mu = (mu1 + mu2) / 2 and all
// three measures share the same moments.
MomentSplit CaratheodorySplit(const FiniteMeasure& mu, const MomentBasis& basis);

struct DescribabilityDemo {
  std::size_t n_moments = 0;
  int r = 0;                      // pattern uses 4r atoms, 4r > n_moments
  std::optional<FiniteGame> game;  // uniform example game with r values per sign
  std::optional<CyclePattern> pattern;
  FiniteMeasure measure;
  MomentBasis basis{{Monomial{}}};
  MomentSplit split;
  std::size_t witness_dimension = 0;
  // Split is nontrivial, halves average to mu, moments agree, and the
  // extremality witness has dimension 1.
  bool verified = false;
};

// Builds an extreme cycle equilibrium with more atoms than n_moments and
// splits it along the first n_moments graded-lex monomials. Requires
// n_moments >= 1.
DescribabilityDemo NonDescribabilityDemo(std::size_t n_moments);

}  // namespace ceptool

#endif  // CEPTOOL_MOMENTS_HPP_
