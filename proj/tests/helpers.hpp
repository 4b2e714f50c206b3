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

#ifndef CEPTOOL_TESTS_HELPERS_HPP_
#define CEPTOOL_TESTS_HELPERS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool::testing {

inline Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline std::vector<Rational> Qs(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

// Measure on the game grid with a random subset of cells and small random
// rational weights.
inline FiniteMeasure RandomMeasure(const FiniteGame& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> keep(0, 2), num(1, 9), den(1, 6);
  FiniteMeasure mu;
  for (const Rational& x : g.cx()) {
    for (const Rational& y : g.cy()) {
      if (keep(rng) == 0) continue;
      mu.Add({x, y}, Rational(num(rng), den(rng)));
    }
  }
  if (mu.empty()) mu.Add({g.cx().front(), g.cy().front()}, Rational(1));
  return mu;
}

}  // namespace ceptool::testing

#endif  // CEPTOOL_TESTS_HELPERS_HPP_
