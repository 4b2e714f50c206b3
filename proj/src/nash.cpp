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

#include "ceptool/nash.hpp"

#include <algorithm>
#include <string>

namespace ceptool {

namespace {

void CheckStrategy(const MixedStrategy& s, const std::vector<Rational>& values,
                   const char* player) {
  for (const auto& [v, w] : s.atoms()) {
    bool found = false;
    for (const Rational& c : values) found |= (c == v);
    if (!found) {
      throw InputError(std::string("strategy value ") + v.ToString() +
                       " is not in the strategy set of player " + player);
    }
  }
  if (!s.is_proper()) {
    throw InputError(std::string("mixed strategy of player ") + player +
                     " has mass " + s.mass().ToString() + ", expected 1");
  }
}

}  // namespace

bool IsNash(const FiniteGame& game, const MixedStrategy& sigma,
            const MixedStrategy& tau) {
  CheckStrategy(sigma, game.cx(), "X");
  CheckStrategy(tau, game.cy(), "Y");
  return MeasureMean(sigma).is_zero() && MeasureMean(tau).is_zero();
}

std::vector<MixedStrategy> ExtremeZeroMeanStrategies(
    const std::vector<Rational>& values) {
  std::vector<MixedStrategy> out;
  std::vector<Rational> neg, pos;
  for (const Rational& v : values) {
    if (v.is_zero()) {
      out.push_back(MixedStrategy{{Rational(0), Rational(1)}});
    } else if (v.sign() < 0) {
      neg.push_back(v);
    } else {
      pos.push_back(v);
    }
  }
  std::sort(neg.begin(), neg.end());
  std::sort(pos.begin(), pos.end());
  for (const Rational& u : neg) {
    for (const Rational& v : pos) {
      const Rational span = v - u;
      out.push_back(MixedStrategy{{u, v / span}, {v, -u / span}});
    }
  }
  return out;
}

std::vector<NashPair> EnumerateExtremeNash(const FiniteGame& game) {
  const auto sigmas = ExtremeZeroMeanStrategies(game.cx());
  const auto taus = ExtremeZeroMeanStrategies(game.cy());
  std::vector<NashPair> out;
  out.reserve(sigmas.size() * taus.size());
  for (const auto& s : sigmas) {
    for (const auto& t : taus) out.push_back({s, t});
  }
  return out;
}

BigInt CountExtremeNash(int n) {
  if (n < 1) throw InputError("n must be positive");
  BigInt b = n;
  return b * b * b * b;
}

}  // namespace ceptool
