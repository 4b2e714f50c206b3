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

#ifndef CEPTOOL_MEASURES_HPP_
#define CEPTOOL_MEASURES_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ceptool/rational.hpp"

namespace ceptool {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A measure violates the hypothesis of a characterization (for example an
// atom on an axis where the projection test does not apply).
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Nonnegative, finitely supported measure on a subset of the real line.
// Zero-weight atoms are never stored.
class MixedStrategy {
 public:
  using Atoms = std::map<Rational, Rational>;

  MixedStrategy() = default;
  MixedStrategy(std::initializer_list<std::pair<Rational, Rational>> atoms);

  // Adds `weight` at `value`. Throws InputError if the weight is negative.
  void Add(const Rational& value, const Rational& weight);

  const Atoms& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  Rational weight(const Rational& value) const;
  Rational mass() const;
  bool is_proper() const { return mass() == Rational(1); }
  MixedStrategy Scaled(const Rational& factor) const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.atoms_ <=> b.atoms_;
  }

 private:
  Atoms atoms_;
};

// Nonnegative, finitely supported measure on C_X x C_Y. Proper when the mass
// is one; any positive mass is a homogeneous measure.
class FiniteMeasure {
 public:
  using Atoms = std::map<Point, Rational>;

  FiniteMeasure() = default;
  FiniteMeasure(std::initializer_list<std::pair<Point, Rational>> atoms);

  void Add(const Point& p, const Rational& weight);

  const Atoms& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  Rational weight(const Point& p) const;
  Rational mass() const;
  std::vector<Point> support() const;

  FiniteMeasure Scaled(const Rational& factor) const;
  // Scales to unit mass. Throws InputError on the zero measure.
  FiniteMeasure Normalized() const;

  FiniteMeasure& operator+=(const FiniteMeasure& other);
  friend FiniteMeasure operator+(FiniteMeasure a, const FiniteMeasure& b) {
    return a += b;
  }

  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;
  friend auto operator<=>(const FiniteMeasure& a, const FiniteMeasure& b) {
    return a.atoms_ <=> b.atoms_;
  }

 private:
  Atoms atoms_;
};

// Finitely supported signed measure on the line.
class SignedFiniteMeasure {
 public:
  using Atoms = std::map<Rational, Rational>;

  void Add(const Rational& point, const Rational& weight);
  const Atoms& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  Rational weight(const Rational& point) const;

  friend bool operator==(const SignedFiniteMeasure&,
                         const SignedFiniteMeasure&) = default;

 private:
  Atoms atoms_;
};

// Two-player zero-sum game with u_X(x, y) = x * y = -u_Y(x, y) on finite
// strategy sets inside [-1, 1], each holding a positive and a negative value.
class FiniteGame {
 public:
  // Sorts and validates. Throws InputError when a value lies outside [-1, 1],
  // a value repeats, or either set lacks a positive or a negative element.
  FiniteGame(std::vector<Rational> cx, std::vector<Rational> cy);

  const std::vector<Rational>& cx() const { return cx_; }
  const std::vector<Rational>& cy() const { return cy_; }
  bool has_x(const Rational& x) const;
  bool has_y(const Rational& y) const;

  static Rational UtilityX(const Rational& x, const Rational& y) {
    return x * y;
  }
  static Rational UtilityY(const Rational& x, const Rational& y) {
    return -(x * y);
  }

  friend bool operator==(const FiniteGame&, const FiniteGame&) = default;

 private:
  std::vector<Rational> cx_;
  std::vector<Rational> cy_;
};

// Game with the given negative and positive strategy values per player.
// Rejects zero, values outside [-1, 1], duplicates and empty sign classes.
FiniteGame MakeExampleGame(const std::vector<Rational>& neg_x,
                           const std::vector<Rational>& pos_x,
                           const std::vector<Rational>& neg_y,
                           const std::vector<Rational>& pos_y);

// Example game with strategy values {+-i/n : i = 1..n} for both players.
// n = 1 is matching pennies.
FiniteGame MakeUniformExampleGame(int n);

FiniteMeasure ProductMeasure(const MixedStrategy& sigma,
                             const MixedStrategy& tau);

// Sum of value * weight.
Rational MeasureMean(const MixedStrategy& m);

}  // namespace ceptool

#endif  // CEPTOOL_MEASURES_HPP_
