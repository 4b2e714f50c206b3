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

#include "ceptool/ce_check.hpp"

#include <map>

namespace ceptool {

namespace {

void CheckSupport(const FiniteGame& game, const FiniteMeasure& mu) {
  for (const auto& [p, w] : mu.atoms()) {
    if (!game.has_x(p.x) || !game.has_y(p.y)) {
      throw InputError("atom (" + p.x.ToString() + ", " + p.y.ToString() +
                       ") lies outside the strategy grid");
    }
  }
}

// Row and column slices of mu keyed by the fixed coordinate.
struct Slices {
  std::map<Rational, std::map<Rational, Rational>> by_x;  // x -> y -> w
  std::map<Rational, std::map<Rational, Rational>> by_y;  // y -> x -> w
};

Slices Slice(const FiniteMeasure& mu) {
  Slices s;
  for (const auto& [p, w] : mu.atoms()) {
    s.by_x[p.x][p.y] = w;
    s.by_y[p.y][p.x] = w;
  }
  return s;
}

}  // namespace

ProjectionPair Projections(const FiniteMeasure& mu, Integrand integrand) {
  ProjectionPair out;
  for (const auto& [p, w] : mu.atoms()) {
    if (integrand == Integrand::kXY) {
      const Rational v = p.x * p.y * w;
      out.kx.Add(p.x, v);
      out.ky.Add(p.y, v);
    } else {
      out.kx.Add(p.x, p.y * w);
      out.ky.Add(p.y, p.x * w);
    }
  }
  return out;
}

CeVerdict CheckCeDefinition(const FiniteGame& game, const FiniteMeasure& mu) {
  CheckSupport(game, mu);
  const Slices s = Slice(mu);
  for (const auto& [x, row] : s.by_x) {
    for (const Rational& alt : game.cx()) {
      if (alt == x) continue;
      Rational sum;
      for (const auto& [y, w] : row) sum += w * (x * y - alt * y);
      if (sum.sign() < 0) {
        return {false,
                CeWitness{"player X recommended x=" + x.ToString() +
                          " gains " + (-sum).ToString() +
                          " by deviating to x'=" + alt.ToString()}};
      }
    }
  }
  for (const auto& [y, col] : s.by_y) {
    for (const Rational& alt : game.cy()) {
      if (alt == y) continue;
      Rational sum;
      for (const auto& [x, w] : col) sum += w * (x * alt - x * y);
      if (sum.sign() < 0) {
        return {false,
                CeWitness{"player Y recommended y=" + y.ToString() +
                          " gains " + (-sum).ToString() +
                          " by deviating to y'=" + alt.ToString()}};
      }
    }
  }
  return {true, std::nullopt};
}

bool IsCeDefinition(const FiniteGame& game, const FiniteMeasure& mu) {
  return CheckCeDefinition(game, mu).is_equilibrium;
}

CeVerdict CheckCeProjection(const FiniteGame& game, const FiniteMeasure& mu) {
  CheckSupport(game, mu);
  for (const auto& [p, w] : mu.atoms()) {
    if (p.x.is_zero() || p.y.is_zero()) {
      throw HypothesisError("projection test requires x*y != 0 on the support; "
                            "atom (" + p.x.ToString() + ", " + p.y.ToString() +
                            ") violates it");
    }
  }
  const ProjectionPair k = Projections(mu, Integrand::kXY);
  if (!k.kx.is_zero()) {
    const auto& [x, v] = *k.kx.atoms().begin();
    return {false, CeWitness{"x-projection of x*y*mu is " + v.ToString() +
                             " at x=" + x.ToString() + ", expected 0"}};
  }
  if (!k.ky.is_zero()) {
    const auto& [y, v] = *k.ky.atoms().begin();
    return {false, CeWitness{"y-projection of x*y*mu is " + v.ToString() +
                             " at y=" + y.ToString() + ", expected 0"}};
  }
  return {true, std::nullopt};
}

bool IsCeProjection(const FiniteGame& game, const FiniteMeasure& mu) {
  return CheckCeProjection(game, mu).is_equilibrium;
}

}  // namespace ceptool
