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

#include "ceptool/cycles.hpp"
#include "ceptool/moments.hpp"
#include "ceptool/svg.hpp"
#include "helpers.hpp"

using namespace ceptool;
using ceptool::testing::Q;

namespace {

// Checks the defining properties of a nontrivial split.
void CheckSplit(const FiniteMeasure& mu, const MomentBasis& basis, const MomentSplit& s) {
  REQUIRE_FALSE(s.extreme_for_basis);
  CHECK(s.mu1 + s.mu2 == mu.Scaled(Q(2)));
  CHECK(s.mu1 != s.mu2);
  CHECK(MomentsOf(s.mu1, basis) == MomentsOf(mu, basis));
  CHECK(MomentsOf(s.mu2, basis) == MomentsOf(mu, basis));
  // One side lost an atom: the step reaches the boundary.
  CHECK((s.mu1.size() < mu.size() || s.mu2.size() < mu.size()));
}

}  // namespace

TEST_CASE("monomials and basis parsing") {
  CHECK(Monomial{2, 1}({Q(3), Q(-2)}) == Q(-18));
  CHECK(Monomial{}({Q(3), Q(5)}) == Q(1));
  CHECK(Monomial{0, 3}.ToString() == "y^3");
  CHECK(MomentBasis::Parse("1, x, y, x^2y, yx").maps() ==
        std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 1}});
  CHECK(MomentBasis::Parse("xx").maps() == std::vector<Monomial>{{2, 0}});
  CHECK(MomentBasis::GradedLex(7).ToString() == "1,x,y,x^2,xy,y^2,x^3");
  CHECK(MomentBasis::Parse(MomentBasis::GradedLex(10).ToString()).maps() ==
        MomentBasis::GradedLex(10).maps());

  for (const char* bad : {"", "x,", "z", "x^", "x^-1", "2x", "x^a", "1x"}) {
    INFO(bad);
    CHECK_THROWS_AS(MomentBasis::Parse(bad), InputError);
  }
  CHECK_THROWS_AS(MomentBasis::GradedLex(0), InputError);
  CHECK_THROWS_AS(MomentBasis(std::vector<Monomial>{}), InputError);
}

TEST_CASE("moment examples") {
  const FiniteMeasure uniform{{{Q(1), Q(1)}, Q(1, 4)},
                              {{Q(1), Q(-1)}, Q(1, 4)},
                              {{Q(-1), Q(1)}, Q(1, 4)},
                              {{Q(-1), Q(-1)}, Q(1, 4)}};
  CHECK(MomentsOf(uniform, MomentBasis::Parse("x,y,xy")) ==
        std::vector<Rational>{Q(0), Q(0), Q(0)});

  const FiniteMeasure point{{{Q(1), Q(1)}, Q(1)}};
  CHECK(MomentsOf(point, MomentBasis::Parse("x,y")) == std::vector<Rational>{Q(1), Q(1)});

  // Hand sum over (2/5, 1/5), (2/5, -4/5), (-3/5, -4/5), (-3/5, 1/5) with
  // weights 25/2, 25/8, 25/12, 25/3.
  const FiniteMeasure k2 = StaircaseK2Measure();
  CHECK(MomentsOf(k2, MomentBasis::Parse("1")) == std::vector<Rational>{Q(625, 24)});
  // xy against 1/|xy|: sign(xy) summed, two positive and two negative atoms.
  CHECK(MomentsOf(k2, MomentBasis::Parse("xy")) == std::vector<Rational>{Q(0)});
  CHECK(MomentsOf(k2, MomentBasis::Parse("x")) ==
        std::vector<Rational>{Q(2, 5) * (Q(25, 2) + Q(25, 8)) -
                              Q(3, 5) * (Q(25, 12) + Q(25, 3))});
}

TEST_CASE("split on the line") {
  const FiniteMeasure mu{{{Q(-1), Q(0)}, Q(1)}, {{Q(0), Q(0)}, Q(1)}, {{Q(1), Q(0)}, Q(1)}};
  const MomentBasis basis = MomentBasis::Parse("1,x");
  const MomentSplit s = CaratheodorySplit(mu, basis);
  CheckSplit(mu, basis, s);
  CHECK_FALSE(s.degenerate);
  // The only direction is (1, -2, 1) up to scale.
  CHECK((s.mu1 == FiniteMeasure{{{Q(-1), Q(0)}, Q(3, 2)}, {{Q(1), Q(0)}, Q(3, 2)}} ||
         s.mu2 == FiniteMeasure{{{Q(-1), Q(0)}, Q(3, 2)}, {{Q(1), Q(0)}, Q(3, 2)}}));
}

TEST_CASE("single atom is extreme") {
  const FiniteMeasure mu{{{Q(1, 2), Q(1, 3)}, Q(1)}};
  const MomentSplit s = CaratheodorySplit(mu, MomentBasis::Parse("1"));
  CHECK(s.extreme_for_basis);
  CHECK(CaratheodorySplit(FiniteMeasure{}, MomentBasis::Parse("1")).extreme_for_basis);
}

TEST_CASE("degenerate split when every moment vanishes") {
  const FiniteMeasure mu{{{Q(1, 2), Q(1, 3)}, Q(1)}};
  const MomentSplit s = CaratheodorySplit(mu, MomentBasis::Parse("x^0y^0"));
  CHECK(s.extreme_for_basis);
  const FiniteMeasure axis{{{Q(0), Q(1, 3)}, Q(1)}};
  const MomentSplit d = CaratheodorySplit(axis, MomentBasis::Parse("x"));
  CHECK(d.degenerate);
  CHECK(d.mu1 + d.mu2 == axis.Scaled(Q(2)));
}

TEST_CASE("four-atom cycle splits for three moments") {
  const FiniteMeasure mu = StaircaseK4Measure();
  const MomentBasis basis = MomentBasis::Parse("1,x,y");
  const MomentSplit s = CaratheodorySplit(mu, basis);
  CheckSplit(mu, basis, s);
  CHECK_FALSE(s.degenerate);
}

TEST_CASE("atom on an axis is handled exactly") {
  const FiniteMeasure mu{{{Q(0), Q(1)}, Q(1)}, {{Q(1), Q(1)}, Q(1)}, {{Q(-1), Q(1)}, Q(2)}};
  const MomentBasis basis = MomentBasis::Parse("1,x");
  CheckSplit(mu, basis, CaratheodorySplit(mu, basis));
}

TEST_CASE("every cycle splits when the basis is smaller than its support") {
  const FiniteGame g = MakeUniformExampleGame(2);
  for (const CyclePattern& p : EnumerateExtremeCePatterns(g)) {
    const FiniteMeasure mu = CycleMeasure(p);
    for (std::size_t d = 1; d < p.length(); ++d) {
      const MomentBasis basis = MomentBasis::GradedLex(d);
      const MomentSplit s = CaratheodorySplit(mu, basis);
      CheckSplit(mu, basis, s);
    }
  }
}

TEST_CASE("random measures split exactly") {
  std::mt19937_64 rng(99);
  const FiniteGame g = MakeUniformExampleGame(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteMeasure mu = ceptool::testing::RandomMeasure(g, rng);
    if (mu.size() < 2) continue;
    const MomentBasis basis = MomentBasis::GradedLex(mu.size() - 1);
    const MomentSplit s = CaratheodorySplit(mu, basis);
    CheckSplit(mu, basis, s);
  }
}

TEST_CASE("non-describability demos") {
  for (std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{7}, std::size_t{100}}) {
    INFO("n = " << n);
    const DescribabilityDemo d = NonDescribabilityDemo(n);
    CHECK(d.verified);
    CHECK(static_cast<std::size_t>(4 * d.r) > n);
    CHECK(d.measure.size() == static_cast<std::size_t>(4 * d.r));
    CHECK(d.witness_dimension == 1);
    REQUIRE(d.pattern);
    CHECK(CycleMeasure(*d.pattern) == d.measure);
    CheckSplit(d.measure, d.basis, d.split);
  }
  CHECK(NonDescribabilityDemo(4).r == 2);
  CHECK_THROWS_AS(NonDescribabilityDemo(0), InputError);
}
