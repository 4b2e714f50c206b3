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

#include <random>

#include "doctest.h"

#include "ceptool/measures.hpp"
#include "helpers.hpp"

using namespace ceptool;
using ceptool::testing::Q;

TEST_CASE("example game construction") {
  const FiniteGame mp = MakeExampleGame({Q(-1)}, {Q(1)}, {Q(-1)}, {Q(1)});
  CHECK(mp.cx() == std::vector<Rational>{Q(-1), Q(1)});
  CHECK(mp.cy() == std::vector<Rational>{Q(-1), Q(1)});
  CHECK(mp == MakeUniformExampleGame(1));

  const FiniteGame g = MakeExampleGame({Q(-3, 5)}, {Q(2, 5)}, {Q(-4, 5)}, {Q(1, 5)});
  CHECK(g.cx() == std::vector<Rational>{Q(-3, 5), Q(2, 5)});
  CHECK(g.cy() == std::vector<Rational>{Q(-4, 5), Q(1, 5)});
}

TEST_CASE("example game rejects bad input") {
  CHECK_THROWS_AS(MakeExampleGame({Q(-1)}, {Q(1)}, {Q(-1)}, {}), InputError);
  CHECK_THROWS_AS(MakeExampleGame({Q(-1)}, {Q(0)}, {Q(-1)}, {Q(1)}), InputError);
  CHECK_THROWS_AS(MakeExampleGame({Q(-3, 2)}, {Q(1)}, {Q(-1)}, {Q(1)}), InputError);
  CHECK_THROWS_AS(MakeExampleGame({Q(1, 2)}, {Q(1)}, {Q(-1)}, {Q(1)}), InputError);
  CHECK_THROWS_AS(MakeExampleGame({Q(-1)}, {Q(1), Q(1)}, {Q(-1)}, {Q(1)}), InputError);
  CHECK_THROWS_AS(FiniteGame({Q(1), Q(1, 2)}, {Q(-1), Q(1)}), InputError);
  // Zero is allowed in general games.
  CHECK_NOTHROW(FiniteGame({Q(-1), Q(0), Q(1)}, {Q(-1), Q(1)}));
}

TEST_CASE("mixed strategies drop zero weights and reject negative ones") {
  MixedStrategy s;
  s.Add(Q(1), Q(0));
  CHECK(s.empty());
  CHECK_THROWS_AS(s.Add(Q(1), Q(-1)), InputError);
  s.Add(Q(1), Q(1, 2));
  s.Add(Q(1), Q(1, 2));
  CHECK(s.is_proper());
}

TEST_CASE("product measure examples") {
  const MixedStrategy u{{Q(-1), Q(1, 2)}, {Q(1), Q(1, 2)}};
  const FiniteMeasure p = ProductMeasure(u, u);
  CHECK(p.size() == 4);
  for (const auto& [pt, w] : p.atoms()) CHECK(w == Q(1, 4));

  const MixedStrategy point{{Q(1), Q(1)}};
  const MixedStrategy tau{{Q(-4, 5), Q(1, 5)}, {Q(1, 5), Q(4, 5)}};
  const FiniteMeasure line = ProductMeasure(point, tau);
  CHECK(line == FiniteMeasure{{{Q(1), Q(-4, 5)}, Q(1, 5)}, {{Q(1), Q(1, 5)}, Q(4, 5)}});

  // Zero-mean marginals of the 2x2 game on {-3/5, 2/5} x {-4/5, 1/5}.
  const MixedStrategy sigma{{Q(-3, 5), Q(2, 5)}, {Q(2, 5), Q(3, 5)}};
  const FiniteMeasure pr = ProductMeasure(sigma, tau);
  CHECK(pr.mass() == Q(1));
  CHECK(pr.weight({Q(2, 5), Q(1, 5)}) == Q(12, 25));
  CHECK(pr.weight({Q(-3, 5), Q(-4, 5)}) == Q(2, 25));
}

TEST_CASE("measure mean examples") {
  CHECK(MeasureMean(MixedStrategy{{Q(-1), Q(1, 2)}, {Q(1), Q(1, 2)}}) == Q(0));
  CHECK(MeasureMean(MixedStrategy{{Q(1), Q(1)}}) == Q(1));
  CHECK(MeasureMean(MixedStrategy{{Q(-3, 5), Q(2, 5)}, {Q(2, 5), Q(3, 5)}}) == Q(0));
}

namespace {

MixedStrategy RandomStrategy(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-5, 5), w(1, 7), n(1, 4);
  MixedStrategy s;
  const int atoms = n(rng);
  for (int i = 0; i < atoms; ++i) s.Add(Q(v(rng), 5), Q(w(rng), 3));
  return s;
}

}  // namespace

TEST_CASE("property: product mass and mean linearity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const MixedStrategy a = RandomStrategy(rng), b = RandomStrategy(rng);
    CHECK(ProductMeasure(a, b).mass() == a.mass() * b.mass());

    const Rational ca(c(rng), 2), cb(c(rng), 3);
    MixedStrategy mix = a.Scaled(ca);
    const MixedStrategy scaled = b.Scaled(cb);
    for (const auto& [v, w] : scaled.atoms()) mix.Add(v, w);
    CHECK(MeasureMean(mix) == ca * MeasureMean(a) + cb * MeasureMean(b));
  }
}

TEST_CASE("finite measure normalization and arithmetic") {
  FiniteMeasure mu{{{Q(1), Q(1)}, Q(2)}, {{Q(-1), Q(1)}, Q(6)}};
  CHECK(mu.mass() == Q(8));
  CHECK(mu.Normalized().mass() == Q(1));
  CHECK(mu.Normalized().weight({Q(1), Q(1)}) == Q(1, 4));
  CHECK(mu + mu == mu.Scaled(Q(2)));
  CHECK(mu.weight({Q(0), Q(0)}) == Q(0));
  CHECK_THROWS_AS(FiniteMeasure().Normalized(), std::exception);
}
