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

#ifndef CEPTOOL_NASH_HPP_
#define CEPTOOL_NASH_HPP_

#include <compare>
#include <vector>

#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool {

struct NashPair {
  MixedStrategy sigma;
  MixedStrategy tau;

  friend bool operator==(const NashPair&, const NashPair&) = default;
  friend auto operator<=>(const NashPair&, const NashPair&) = default;
};

// A pair of proper mixed strategies is an equilibrium of the game exactly
// when both strategies have mean zero. Throws InputError if a support point
// is not a strategy of the game or a strategy does not have unit mass.
bool IsNash(const FiniteGame& game, const MixedStrategy& sigma,
            const MixedStrategy& tau);

// Extreme points of the zero-mean probability measures on `values`: the
// point mass at 0 (when 0 is a value) followed by the two-point mixtures
// v/(v-u) at u and -u/(v-u) at v, for u < 0 < v in lexicographic (u, v)
// order.
std::vector<MixedStrategy> ExtremeZeroMeanStrategies(
    const std::vector<Rational>& values);

// Every extreme equilibrium, sigma-major, each side ordered as above.
std::vector<NashPair> EnumerateExtremeNash(const FiniteGame& game);

// n^4: the number of extreme equilibria of an example game with n positive
// and n negative strategies per player.
BigInt CountExtremeNash(int n);

}  // namespace ceptool

#endif  // CEPTOOL_NASH_HPP_
