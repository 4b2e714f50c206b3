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

#ifndef CEPTOOL_CYCLES_HPP_
#define CEPTOOL_CYCLES_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool {

class PatternError : public InputError {
 public:
  using InputError::InputError;
};

// Closed staircase of 2k support points (x_i, y_i), i = 1..2k, k even, where
// consecutive points alternately share their x and their y coordinate:
//   x_{2i} = x_{2i-1},  y_{2i} = y_{2i+1}  (indices mod 2k),
// the odd-indexed x values are distinct, nonzero and alternate in sign, and
// likewise for the odd-indexed y values. Stored 0-based.
class CyclePattern {
 public:
  // Throws PatternError naming the first violated condition.
  CyclePattern(std::vector<Rational> xs, std::vector<Rational> ys);

  // Builds the full sequences from the k odd-indexed values of each axis.
  static CyclePattern FromOddValues(const std::vector<Rational>& odd_xs,
                                    const std::vector<Rational>& odd_ys);

  int k() const { return static_cast<int>(xs_.size() / 2); }
  std::size_t length() const { return xs_.size(); }
  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }
  Point point(std::size_t i) const { return {xs_[i], ys_[i]}; }
  std::vector<Rational> odd_xs() const;
  std::vector<Rational> odd_ys() const;

  friend bool operator==(const CyclePattern&, const CyclePattern&) = default;
  friend auto operator<=>(const CyclePattern&, const CyclePattern&) = default;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

// Homogeneous measure with weight 1/|x_i y_i| at each of the 2k points.
FiniteMeasure CycleMeasure(const CyclePattern& p);

// Shifting both sequences by an even amount or reversing them leaves the
// measure unchanged. Returns the lexicographically least image (xs, then ys)
// among those with x_1 > 0 and y_1 > 0.
CyclePattern CanonicalForm(const CyclePattern& p);

// Recovers the pattern whose cycle measure is proportional to `mu`, in
// canonical form, or nullopt if `mu` is not of that shape.
std::optional<CyclePattern> PatternOfMeasure(const FiniteMeasure& mu);

// Canonical patterns of every extreme correlated equilibrium of an example
// game (no zero strategies), sorted and duplicate-free.
std::vector<CyclePattern> EnumerateExtremeCePatterns(const FiniteGame& game);

// Cycle measures of the patterns above, sorted.
std::vector<FiniteMeasure> EnumerateExtremeCe(const FiniteGame& game);

// Closed-form count sum_{r=1}^{n} (1/r) (n!/(n-r)!)^4. Throws
// std::logic_error if the sum fails to reduce to an integer.
BigInt CountExtremeCe(int n);

// e(n) / ((1/n) (n!)^4).
Rational FRatio(int n);

// Terms n/(n-s) * 1/(s!)^4 for s = 0..n-1; they sum to FRatio(n).
std::vector<Rational> FRatioTerms(int n);

// Dimension of the solution space of
//   a_{2i-1} y_{2i-1} + a_{2i} y_{2i} = 0,  a_{2i+1} x_{2i+1} + a_{2i} x_{2i} = 0
// over all i (indices mod 2k). The pattern's measure is extreme exactly when
// this is 1.
std::size_t ExtremalityWitnessDimension(const CyclePattern& p);

}  // namespace ceptool

#endif  // CEPTOOL_CYCLES_HPP_
