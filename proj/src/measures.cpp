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

#include "ceptool/measures.hpp"

#include <algorithm>

namespace ceptool {

MixedStrategy::MixedStrategy(
    std::initializer_list<std::pair<Rational, Rational>> atoms) {
  for (const auto& [v, w] : atoms) Add(v, w);
}

void MixedStrategy::Add(const Rational& value, const Rational& weight) {
  if (weight.sign() < 0) {
    throw InputError("mixed strategy weight must be nonnegative, got " +
                     weight.ToString());
  }
  if (weight.is_zero()) return;
  atoms_[value] += weight;
}

Rational MixedStrategy::weight(const Rational& value) const {
  auto it = atoms_.find(value);
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational MixedStrategy::mass() const {
  Rational total;
  for (const auto& [v, w] : atoms_) total += w;
  return total;
}

MixedStrategy MixedStrategy::Scaled(const Rational& factor) const {
  MixedStrategy out;
  for (const auto& [v, w] : atoms_) out.Add(v, w * factor);
  return out;
}

FiniteMeasure::FiniteMeasure(
    std::initializer_list<std::pair<Point, Rational>> atoms) {
  for (const auto& [p, w] : atoms) Add(p, w);
}

void FiniteMeasure::Add(const Point& p, const Rational& weight) {
  if (weight.sign() < 0) {
    throw InputError("measure weight must be nonnegative, got " +
                     weight.ToString());
  }
  if (weight.is_zero()) return;
  atoms_[p] += weight;
}

Rational FiniteMeasure::weight(const Point& p) const {
  auto it = atoms_.find(p);
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational FiniteMeasure::mass() const {
  Rational total;
  for (const auto& [p, w] : atoms_) total += w;
  return total;
}

std::vector<Point> FiniteMeasure::support() const {
  std::vector<Point> out;
  out.reserve(atoms_.size());
  for (const auto& [p, w] : atoms_) out.push_back(p);
  return out;
}

FiniteMeasure FiniteMeasure::Scaled(const Rational& factor) const {
  FiniteMeasure out;
  for (const auto& [p, w] : atoms_) out.Add(p, w * factor);
  return out;
}

FiniteMeasure FiniteMeasure::Normalized() const {
  const Rational m = mass();
  if (m.is_zero()) throw InputError("cannot normalize the zero measure");
  return Scaled(m.inverse());
}

FiniteMeasure& FiniteMeasure::operator+=(const FiniteMeasure& other) {
  for (const auto& [p, w] : other.atoms_) Add(p, w);
  return *this;
}

void SignedFiniteMeasure::Add(const Rational& point, const Rational& weight) {
  if (weight.is_zero()) return;
  auto [it, inserted] = atoms_.try_emplace(point, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) atoms_.erase(it);
  }
}

Rational SignedFiniteMeasure::weight(const Rational& point) const {
  auto it = atoms_.find(point);
  return it == atoms_.end() ? Rational(0) : it->second;
}

namespace {

void ValidateStrategySet(std::vector<Rational>& values, const char* name) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw InputError(std::string(name) + " contains a repeated value");
  }
  bool has_pos = false, has_neg = false;
  for (const Rational& v : values) {
    if (v < Rational(-1) || v > Rational(1)) {
      throw InputError(std::string(name) + " value " + v.ToString() +
                       " lies outside [-1, 1]");
    }
    has_pos |= v.sign() > 0;
    has_neg |= v.sign() < 0;
  }
  if (!has_pos || !has_neg) {
    throw InputError(std::string("sign condition violated: ") + name +
                     " needs at least one positive and one negative value");
  }
}

}  // namespace

FiniteGame::FiniteGame(std::vector<Rational> cx, std::vector<Rational> cy)
    : cx_(std::move(cx)), cy_(std::move(cy)) {
  ValidateStrategySet(cx_, "C_X");
  ValidateStrategySet(cy_, "C_Y");
}

bool FiniteGame::has_x(const Rational& x) const {
  return std::binary_search(cx_.begin(), cx_.end(), x);
}

bool FiniteGame::has_y(const Rational& y) const {
  return std::binary_search(cy_.begin(), cy_.end(), y);
}

namespace {

void CheckSignClass(const std::vector<Rational>& values, int sign,
                    const char* name) {
  if (values.empty()) {
    throw InputError(std::string("sign condition violated: no ") +
                     (sign > 0 ? "positive " : "negative ") + name +
                     " strategy");
  }
  for (const Rational& v : values) {
    if (v.is_zero()) {
      throw InputError(std::string("example games exclude the value 0 in ") +
                       name);
    }
    if (v.sign() != sign) {
      throw InputError(std::string(name) + " value " + v.ToString() +
                       " has the wrong sign for its list");
    }
  }
}

std::vector<Rational> Concat(const std::vector<Rational>& a,
                             const std::vector<Rational>& b) {
  std::vector<Rational> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

FiniteGame MakeExampleGame(const std::vector<Rational>& neg_x,
                           const std::vector<Rational>& pos_x,
                           const std::vector<Rational>& neg_y,
                           const std::vector<Rational>& pos_y) {
  CheckSignClass(neg_x, -1, "x");
  CheckSignClass(pos_x, +1, "x");
  CheckSignClass(neg_y, -1, "y");
  CheckSignClass(pos_y, +1, "y");
  return FiniteGame(Concat(neg_x, pos_x), Concat(neg_y, pos_y));
}

FiniteGame MakeUniformExampleGame(int n) {
  if (n < 1) throw InputError("example game size must be positive");
  std::vector<Rational> neg, pos;
  for (int i = 1; i <= n; ++i) {
    pos.emplace_back(i, n);
    neg.emplace_back(-i, n);
  }
  return MakeExampleGame(neg, pos, neg, pos);
}

FiniteMeasure ProductMeasure(const MixedStrategy& sigma,
                             const MixedStrategy& tau) {
  FiniteMeasure out;
  for (const auto& [x, wx] : sigma.atoms()) {
    for (const auto& [y, wy] : tau.atoms()) out.Add({x, y}, wx * wy);
  }
  return out;
}

Rational MeasureMean(const MixedStrategy& m) {
  Rational total;
  for (const auto& [v, w] : m.atoms()) total += v * w;
  return total;
}

}  // namespace ceptool
