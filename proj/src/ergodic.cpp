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

#include "ceptool/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "ceptool/kernels.hpp"
#include "ceptool/parallel.hpp"

namespace ceptool {

RotationParams RotationParams::Sqrt5(double a, double b, double c) {
  RotationParams p;
  p.a = a;
  p.b = b;
  p.alpha = c / std::sqrt(5.0);
  p.irrational = true;
  return p;
}

RotationParams RotationParams::WithRotationNumber(double a, double b,
                                                  std::int64_t p,
                                                  std::int64_t q) {
  if (q <= 0 || p < 0 || p > q) {
    throw InputError("rotation number must be p/q with 0 <= p <= q, q > 0");
  }
  RotationParams r;
  r.a = a;
  r.b = b;
  r.alpha = (b - a) * static_cast<double>(p) / static_cast<double>(q);
  const std::int64_t g = std::gcd(p, q);
  r.rotation_number = std::make_pair(p / g, q / g);
  return r;
}

void RotationParams::Validate() const {
  if (!(0.0 < a && a < b && b < 1.0)) {
    throw InputError("rotation endpoints must satisfy 0 < a < b < 1");
  }
  if (!(0.0 <= alpha && alpha <= b - a)) {
    throw InputError("rotation offset must satisfy 0 <= alpha <= b - a");
  }
}

double RotationMap(const RotationParams& params, double x) {
  if (!(params.a <= x && x < params.b)) {
    throw InputError("rotation map is only defined on [a, b)");
  }
  double y = x - params.a + params.alpha;
  if (y >= params.length()) y -= params.length();
  return y + params.a;
}

namespace {

// Support piece t -> (sx t + ox, sy t + oy) for t in [t0, t1).
struct Piece {
  double t0, t1;
  double sx, ox;
  double sy, oy;

  double X(double t) const { return sx * t + ox; }
  double Y(double t) const { return sy * t + oy; }
  bool empty() const { return !(t0 < t1); }
  // Sign of x y, constant along the piece since |x|, |y| >= a.
  double sign() const {
    const double tm = 0.5 * (t0 + t1);
    return (X(tm) > 0) == (Y(tm) > 0) ? 1.0 : -1.0;
  }
};

// Pieces in the order Q4, Q3, Q2, Q1a, Q1b.
std::array<Piece, 5> Pieces(const RotationParams& p) {
  const double wrap = p.b - p.alpha;
  std::array<Piece, 5> out = {{
      {p.a, p.b, 1, 0, -1, 0},
      {p.a, p.b, -1, 0, -1, 0},
      {p.a, p.b, -1, 0, 1, 0},
      {p.a, wrap, 1, 0, 1, p.alpha},
      {wrap, p.b, 1, 0, 1, p.alpha - p.length()},
  }};
  if (p.clockwise) {
    for (Piece& pc : out) {
      std::swap(pc.sx, pc.sy);
      std::swap(pc.ox, pc.oy);
    }
  }
  return out;
}

// 1 / |x y| along the piece.
kernels::ReciprocalAffine Density(const Piece& pc) {
  return {pc.sign(), pc.sx, pc.ox, pc.sy, pc.oy};
}

// y / |x y| = sign(x y) / x.
kernels::ReciprocalAffine OpponentOverX(const Piece& pc) {
  return {pc.sign(), pc.sx, pc.ox, 0.0, 1.0};
}

// x / |x y| = sign(x y) / y.
kernels::ReciprocalAffine OpponentOverY(const Piece& pc) {
  return {pc.sign(), pc.sy, pc.oy, 0.0, 1.0};
}

double Integrate(const kernels::ReciprocalAffine& f, double t0, double t1,
                 std::size_t nodes) {
  if (!(t0 < t1)) return 0.0;
  return kernels::Midpoint(f, t0, (t1 - t0) / static_cast<double>(nodes), nodes);
}

// Index of the bin of [-1, 1] containing v.
std::size_t BinOf(double v, std::size_t bins) {
  const double u = (v + 1.0) * 0.5 * static_cast<double>(bins);
  const auto i = static_cast<std::ptrdiff_t>(std::floor(u));
  return static_cast<std::size_t>(
      std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(bins) - 1));
}

// Adds the integral of f over the piece into the bin of the coordinate
// s t + o, cutting the parameter range at bin edges.
void AccumulateByBin(const Piece& pc, double s, double o,
                     const kernels::ReciprocalAffine& f, std::size_t bins,
                     std::size_t nodes, std::vector<double>& acc) {
  if (pc.empty()) return;
  std::vector<double> cuts = {pc.t0, pc.t1};
  for (std::size_t e = 1; e < bins; ++e) {
    const double edge = -1.0 + 2.0 * static_cast<double>(e) / static_cast<double>(bins);
    const double t = (edge - o) / s;
    if (pc.t0 < t && t < pc.t1) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    acc[BinOf(s * mid + o, bins)] += Integrate(f, cuts[i], cuts[i + 1], nodes);
  }
}

double PieceMassExact(const Piece& pc) {
  if (pc.empty()) return 0.0;
  // One coordinate is +-t and the other is +-(t + c).
  const double c = std::abs(pc.X(pc.t0)) + std::abs(pc.Y(pc.t0)) - 2.0 * pc.t0;
  if (c == 0.0) return 1.0 / pc.t0 - 1.0 / pc.t1;
  // int dt / (t (t + c)) = (1/c) ln(t / (t + c)).
  return (std::log(pc.t1 / (pc.t1 + c)) - std::log(pc.t0 / (pc.t0 + c))) / c;
}

int QuadrantOf(double x, double y) {
  if (x > 0) return y > 0 ? 1 : 4;
  return y > 0 ? 2 : 3;
}

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double SegmentDistance(const Segment& s, double x, double y) {
  const double dx = s.x1 - s.x0, dy = s.y1 - s.y0;
  const double len2 = dx * dx + dy * dy;
  double u = 0.0;
  if (len2 > 0.0) u = std::clamp(((x - s.x0) * dx + (y - s.y0) * dy) / len2, 0.0, 1.0);
  return std::hypot(x - (s.x0 + u * dx), y - (s.y0 + u * dy));
}

}  // namespace

std::array<Segment, 5> SupportSegments(const RotationParams& params) {
  params.Validate();
  std::array<Segment, 5> out{};
  const auto pieces = Pieces(params);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& pc = pieces[i];
    out[i] = {pc.X(pc.t0), pc.Y(pc.t0), pc.X(pc.t1), pc.Y(pc.t1)};
  }
  return out;
}

double DistanceToSupport(const RotationParams& params, double x, double y) {
  params.Validate();
  const auto pieces = Pieces(params);
  const auto segs = SupportSegments(params);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (pieces[i].empty()) continue;
    best = std::min(best, SegmentDistance(segs[i], x, y));
  }
  return best;
}

std::array<double, 4> QuadrantMassesExact(const RotationParams& params) {
  params.Validate();
  std::array<double, 4> m{};
  for (const Piece& pc : Pieces(params)) {
    if (pc.empty()) continue;
    const double tm = 0.5 * (pc.t0 + pc.t1);
    m[QuadrantOf(pc.X(tm), pc.Y(tm)) - 1] += PieceMassExact(pc);
  }
  return m;
}

std::array<double, 4> QuadrantMassesQuadrature(const RotationParams& params,
                                               std::size_t quad_points) {
  params.Validate();
  if (quad_points < 1) throw InputError("quad_points must be positive");
  std::array<double, 4> m{};
  for (const Piece& pc : Pieces(params)) {
    if (pc.empty()) continue;
    const double tm = 0.5 * (pc.t0 + pc.t1);
    m[QuadrantOf(pc.X(tm), pc.Y(tm)) - 1] +=
        Integrate(Density(pc), pc.t0, pc.t1, quad_points);
  }
  return m;
}

Residuals ConditionalMeanResiduals(const RotationParams& params,
                                   std::size_t bins, std::size_t quad_points) {
  params.Validate();
  if (bins < 1) throw InputError("bins must be at least 1");
  if (quad_points < 10) throw InputError("quad_points must be at least 10");
  std::vector<double> lx(bins, 0.0), ly(bins, 0.0);
  for (const Piece& pc : Pieces(params)) {
    AccumulateByBin(pc, pc.sx, pc.ox, OpponentOverX(pc), bins, quad_points, lx);
    AccumulateByBin(pc, pc.sy, pc.oy, OpponentOverY(pc), bins, quad_points, ly);
  }
  Residuals r;
  for (double v : lx) r.lambda_x = std::max(r.lambda_x, std::abs(v));
  for (double v : ly) r.lambda_y = std::max(r.lambda_y, std::abs(v));
  return r;
}

std::vector<SamplePoint> Sample(const RotationParams& params, std::size_t n,
                                std::uint64_t seed) {
  params.Validate();
  if (n < 1) throw InputError("sample size must be positive");
  const auto pieces = Pieces(params);
  std::array<double, 5> cumulative{};
  double total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    total += PieceMassExact(pieces[i]);
    cumulative[i] = total;
  }
  const double a2 = params.a * params.a;

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<SamplePoint> out(n);
  ParallelFor(chunks, [&](std::size_t c) {
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (c + 1));
    std::mt19937_64 rng(SplitMix64(state));
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const double u = Uniform01(rng) * total;
      std::size_t k = 0;
      while (k + 1 < pieces.size() && (pieces[k].empty() || u >= cumulative[k])) ++k;
      const Piece& pc = pieces[k];
      for (;;) {
        const double t = pc.t0 + Uniform01(rng) * (pc.t1 - pc.t0);
        if (t >= pc.t1) continue;
        const double x = pc.X(t), y = pc.Y(t);
        if (Uniform01(rng) * std::abs(x * y) < a2) {
          out[i] = {x, y, QuadrantOf(x, y)};
          break;
        }
      }
    }
  });
  return out;
}

double EquidistributionDiscrepancy(const RotationParams& params,
                                   std::size_t n_orbit, std::size_t bins) {
  params.Validate();
  if (bins < 1) throw InputError("bins must be at least 1");
  if (n_orbit < bins * bins) throw InputError("orbit length must be at least bins^2");
  std::vector<std::size_t> counts(bins, 0);
  if (params.rotation_number) {
    // Orbit of a is a + L (k p mod q) / q; bin it with integer arithmetic.
    const auto [p, q] = *params.rotation_number;
    const auto uq = static_cast<unsigned __int128>(q);
    unsigned __int128 pos = 0;
    for (std::size_t k = 0; k < n_orbit; ++k) {
      ++counts[static_cast<std::size_t>(pos * bins / uq)];
      pos = (pos + static_cast<unsigned __int128>(p)) % uq;
    }
  } else {
    double x = params.a;
    for (std::size_t k = 0; k < n_orbit; ++k) {
      const double u = (x - params.a) / params.length() * static_cast<double>(bins);
      ++counts[std::min(bins - 1, static_cast<std::size_t>(u))];
      x = RotationMap(params, x);
    }
  }
  double tv = 0.0;
  const double uniform = 1.0 / static_cast<double>(bins);
  for (std::size_t c : counts) {
    tv += std::abs(static_cast<double>(c) / static_cast<double>(n_orbit) - uniform);
  }
  return 0.5 * tv;
}

void RationalRotation::Validate() const {
  if (!(Rational(0) < a && a < b && b < Rational(1))) {
    throw InputError("rotation endpoints must satisfy 0 < a < b < 1");
  }
  if (alpha.sign() < 0 || alpha > b - a) {
    throw InputError("rotation offset must satisfy 0 <= alpha <= b - a");
  }
}

Rational RationalRotation::RotationNumber() const {
  Validate();
  Rational r = alpha / length();
  if (r == Rational(1)) r = Rational(0);
  return r;
}

RotationParams RationalRotation::ToParams() const {
  Validate();
  RotationParams p;
  p.a = a.to_double();
  p.b = b.to_double();
  p.alpha = alpha.to_double();
  const Rational r = RotationNumber();
  p.rotation_number = std::make_pair(r.numerator().get_si(), r.denominator().get_si());
  return p;
}

Rational RotationMapExact(const RationalRotation& rot, const Rational& x) {
  rot.Validate();
  if (x < rot.a || x >= rot.b) {
    throw InputError("rotation map is only defined on [a, b)");
  }
  Rational y = x - rot.a + rot.alpha;
  if (y >= rot.length()) y -= rot.length();
  return y + rot.a;
}

CyclePattern RationalOrbitToCycle(const RationalRotation& rot,
                                  const Rational& x0) {
  const Rational r = rot.RotationNumber();
  if (!r.denominator().fits_slong_p()) {
    throw InputError("rotation number denominator is too large");
  }
  const long q = r.denominator().get_si();
  std::vector<Rational> orbit = {x0};
  for (long i = 1; i < q; ++i) {
    orbit.push_back(RotationMapExact(rot, orbit.back()));
    if (orbit.back() == x0) {
      throw std::logic_error("orbit closed after " + std::to_string(i) +
                             " steps, expected " + std::to_string(q));
    }
  }
  if (RotationMapExact(rot, orbit.back()) != x0) {
    throw std::logic_error("orbit did not close after " + std::to_string(q) +
                           " steps");
  }
  // Walk Q4 -> Q1 -> Q2 -> Q3 -> Q4: (t_i, -t_i), (t_i, t_{i+1}),
  // (-t_{i+1}, t_{i+1}), (-t_{i+1}, -t_{i+1}).
  std::vector<Rational> odd_xs, odd_ys;
  for (long i = 0; i < q; ++i) {
    const Rational& t = orbit[static_cast<std::size_t>(i)];
    const Rational& next = orbit[static_cast<std::size_t>((i + 1) % q)];
    odd_xs.push_back(t);
    odd_xs.push_back(-next);
    odd_ys.push_back(-t);
    odd_ys.push_back(next);
  }
  return CyclePattern::FromOddValues(odd_xs, odd_ys);
}

bool QuadrantMapPreservesKappa(const RationalRotation& rot,
                               const FiniteMeasure& mu) {
  FiniteMeasure image;
  for (const auto& [p, w] : mu.atoms()) {
    if (p.x.is_zero() || p.y.is_zero()) return false;
    Point q;
    if (p.x.sign() > 0 && p.y.sign() < 0) {
      if (p.x < rot.a || p.x >= rot.b) return false;
      q = {p.x, RotationMapExact(rot, p.x)};
    } else if (p.x.sign() > 0) {
      q = {-p.y, p.y};
    } else if (p.y.sign() > 0) {
      q = {p.x, p.x};
    } else {
      q = {-p.y, p.y};
    }
    image.Add(q, (p.x * p.y).abs() * w);
  }
  FiniteMeasure kappa;
  for (const auto& [p, w] : mu.atoms()) kappa.Add(p, (p.x * p.y).abs() * w);
  return image == kappa;
}

}  // namespace ceptool
