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

#ifndef CEPTOOL_ERGODIC_HPP_
#define CEPTOOL_ERGODIC_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ceptool/cycles.hpp"
#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool {

// Rotation f(x) = ((x - a + alpha) mod (b - a)) + a of [a, b), and the
// equilibrium whose quadrant pieces are
//   Q1: (t, f(t)),  Q2: (-t, t),  Q3: (-t, -t),  Q4: (t, -t),   t in [a, b),
// with Lebesgue measure in t and density 1/|x y|.
struct RotationParams {
  double a = 0.2;
  double b = 0.8;
  double alpha = 0.0;
  // alpha / (b - a) is irrational by construction (e.g. alpha = c / sqrt 5).
  bool irrational = false;
  // Exact rotation number p/q = alpha / (b - a) when it is rational.
  std::optional<std::pair<std::int64_t, std::int64_t>> rotation_number;
  // Mirror the support through the diagonal, which reverses the direction in
  // which the quadrant map cycles through the quadrants.
  bool clockwise = false;

  double length() const { return b - a; }

  // alpha = c / sqrt(5).
  static RotationParams Sqrt5(double a, double b, double c);
  // alpha = (b - a) p / q, with p/q stored exactly.
  static RotationParams WithRotationNumber(double a, double b, std::int64_t p,
                                           std::int64_t q);

  // Requires 0 < a < b < 1 and 0 <= alpha <= b - a. Throws InputError.
  void Validate() const;
};

// Throws InputError for x outside [a, b).
double RotationMap(const RotationParams& params, double x);

struct Segment {
  double x0, y0, x1, y1;
};

// The five support segments in the order Q4, Q3, Q2, then the two pieces of
// Q1 split at the wrap point x = b - alpha (the second is degenerate when
// alpha = 0).
std::array<Segment, 5> SupportSegments(const RotationParams& params);

double DistanceToSupport(const RotationParams& params, double x, double y);

// Masses of the quadrant pieces Q1..Q4 in closed form.
std::array<double, 4> QuadrantMassesExact(const RotationParams& params);

// Same masses by the composite midpoint rule with `quad_points` nodes on each
// support piece.
std::array<double, 4> QuadrantMassesQuadrature(const RotationParams& params,
                                               std::size_t quad_points);

struct Residuals {
  double lambda_x = 0.0;  // max over bins of |int_{A x I} y dmu|
  double lambda_y = 0.0;  // max over bins of |int_{I x A} x dmu|
};

// Splits [-1, 1] into `bins` equal bins per axis, cuts every support piece at
// the bin edges and integrates each cut piece with the composite midpoint
// rule on `quad_points` nodes. Both projections vanish analytically; the
// residual comes from the wrap point of Q1 and shrinks like quad_points^-2.
// Requires bins >= 1 and quad_points >= 10.
Residuals ConditionalMeanResiduals(const RotationParams& params,
                                   std::size_t bins, std::size_t quad_points);

struct SamplePoint {
  double x;
  double y;
  int quadrant;  // 1..4
};

// n independent draws from the normalized equilibrium: a quadrant with
// probability proportional to its mass, then t on [a, b) by rejection
// against 1/|x y| with envelope 1/a^2. Draws are generated in fixed-size
// chunks with independently seeded generators, so the output depends only on
// (params, n, seed) and not on the thread count.
std::vector<SamplePoint> Sample(const RotationParams& params, std::size_t n,
                                std::uint64_t seed);

// Total variation distance between the histogram of the orbit
// a, f(a), f(f(a)), ... (n_orbit points, `bins` equal bins on [a, b)) and
// the uniform histogram. Rational rotation numbers are iterated exactly.
// Requires n_orbit >= bins^2.
double EquidistributionDiscrepancy(const RotationParams& params,
                                   std::size_t n_orbit, std::size_t bins);

// Rotation with exact rational data, for the finitely supported shadows.
struct RationalRotation {
  Rational a;
  Rational b;
  Rational alpha;

  // Requires 0 < a < b < 1 and 0 <= alpha <= b - a.
  void Validate() const;
  Rational length() const { return b - a; }
  // alpha / (b - a) in lowest terms, reduced mod 1 to [0, 1).
  Rational RotationNumber() const;
  RotationParams ToParams() const;
};

Rational RotationMapExact(const RationalRotation& rot, const Rational& x);

// The cycle pattern whose measure is the equilibrium built on the uniform
// measure over the orbit of x0: k = 2q for rotation number p/q, one atom per
// quadrant per orbit point. Throws InputError if x0 is outside [a, b) and
// std::logic_error if the orbit period differs from q.
CyclePattern RationalOrbitToCycle(const RationalRotation& rot,
                                  const Rational& x0);

// Applies the quadrant map g to every atom of `mu` and checks that it
// permutes the support while preserving |x y| mu (the |kappa| weights).
bool QuadrantMapPreservesKappa(const RationalRotation& rot,
                               const FiniteMeasure& mu);

}  // namespace ceptool

#endif  // CEPTOOL_ERGODIC_HPP_
