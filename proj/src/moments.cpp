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

#include "ceptool/moments.hpp"

#include <cctype>
#include <charconv>

#include "ceptool/linalg.hpp"

namespace ceptool {

Rational Monomial::operator()(const Point& pt) const {
  return Pow(pt.x, p) * Pow(pt.y, q);
}

std::string Monomial::ToString() const {
  if (p == 0 && q == 0) return "1";
  std::string s;
  if (p > 0) s += p == 1 ? "x" : "x^" + std::to_string(p);
  if (q > 0) s += q == 1 ? "y" : "y^" + std::to_string(q);
  return s;
}

MomentBasis::MomentBasis(std::vector<Monomial> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw InputError("moment basis must be nonempty");
}

namespace {

// Parses one term such as "x^2y", "yx", "1".
Monomial ParseMonomial(std::string_view term) {
  auto bad = [&]() {
    return InputError("malformed monomial '" + std::string(term) + "'");
  };
  if (term == "1") return {};
  if (term.empty()) throw bad();
  Monomial m;
  std::size_t i = 0;
  while (i < term.size()) {
    const char var = term[i++];
    if (var != 'x' && var != 'y') throw bad();
    unsigned e = 1;
    if (i < term.size() && term[i] == '^') {
      ++i;
      const char* first = term.data() + i;
      const char* last = term.data() + term.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec != std::errc() || ptr == first) throw bad();
      i += static_cast<std::size_t>(ptr - first);
    }
    (var == 'x' ? m.p : m.q) += e;
  }
  return m;
}

}  // namespace

MomentBasis MomentBasis::Parse(std::string_view text) {
  std::vector<Monomial> maps;
  std::string term;
  auto flush = [&]() {
    maps.push_back(ParseMonomial(term));
    term.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else {
      term += c;
    }
  }
  flush();
  return MomentBasis(std::move(maps));
}

MomentBasis MomentBasis::GradedLex(std::size_t d) {
  if (d == 0) throw InputError("moment basis must be nonempty");
  std::vector<Monomial> maps;
  for (unsigned deg = 0; maps.size() < d; ++deg) {
    for (unsigned q = 0; q <= deg && maps.size() < d; ++q) {
      maps.push_back({deg - q, q});
    }
  }
  return MomentBasis(std::move(maps));
}

std::string MomentBasis::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (i) s += ',';
    s += maps_[i].ToString();
  }
  return s;
}

std::vector<Rational> MomentsOf(const FiniteMeasure& mu,
                                const MomentBasis& basis) {
  std::vector<Rational> out(basis.size());
  for (const auto& [pt, w] : mu.atoms()) {
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] += basis.maps()[j](pt) * w;
  }
  return out;
}

MomentSplit CaratheodorySplit(const FiniteMeasure& mu, const MomentBasis& basis) {
  const std::vector<Point> support = mu.support();
  const std::size_t m = support.size();
  MomentSplit out;
  if (m == 0) {
    out.extreme_for_basis = true;
    return out;
  }
  RationalMatrix g(basis.size(), RationalVector(m));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      g[j][i] = basis.maps()[j](support[i]) * mu.weight(support[i]);
    }
  }
  const std::vector<RationalVector> null = NullSpace(g, m);
  if (null.empty()) {
    out.extreme_for_basis = true;
    return out;
  }
  auto constant = [](const RationalVector& v) {
    for (const Rational& c : v) {
      if (c != v.front()) return false;
    }
    return true;
  };
  const RationalVector* v = &null.front();
  for (const RationalVector& cand : null) {
    if (!constant(cand)) {
      v = &cand;
      break;
    }
  }
  out.degenerate = constant(*v);

  // Largest t keeping 1 + t v >= 0 and 1 - t v >= 0.
  std::optional<Rational> t;
  for (const Rational& c : *v) {
    if (c.is_zero()) continue;
    const Rational bound = c.abs().inverse();
    if (!t || bound < *t) t = bound;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Rational w = mu.weight(support[i]);
    out.mu1.Add(support[i], w * (Rational(1) + *t * (*v)[i]));
    out.mu2.Add(support[i], w * (Rational(1) - *t * (*v)[i]));
  }
  return out;
}

DescribabilityDemo NonDescribabilityDemo(std::size_t n_moments) {
  if (n_moments < 1) throw InputError("n_moments must be at least 1");
  DescribabilityDemo d;
  d.n_moments = n_moments;
  d.r = static_cast<int>(n_moments / 4 + 1);
  d.game = MakeUniformExampleGame(d.r);

  // Values v_i = i / r. x visits v1, -v1, v2, -v2, ...; y visits
  // v1, -v2, v2, -v3, ..., v_r, -v1, a single cycle through all values.
  std::vector<Rational> odd_xs, odd_ys;
  for (int i = 1; i <= d.r; ++i) {
    const Rational v(i, d.r);
    const Rational next(i % d.r + 1, d.r);
    odd_xs.push_back(v);
    odd_xs.push_back(-v);
    odd_ys.push_back(v);
    odd_ys.push_back(-next);
  }
  d.pattern = CanonicalForm(CyclePattern::FromOddValues(odd_xs, odd_ys));
  d.measure = CycleMeasure(*d.pattern);
  d.basis = MomentBasis::GradedLex(n_moments);
  d.split = CaratheodorySplit(d.measure, d.basis);
  d.witness_dimension = ExtremalityWitnessDimension(*d.pattern);

  const MomentSplit& s = d.split;
  const auto target = MomentsOf(d.measure, d.basis);
  d.verified = !s.extreme_for_basis && !s.degenerate && s.mu1 != s.mu2 &&
               !s.mu1.empty() && !s.mu2.empty() &&
               s.mu1 + s.mu2 == d.measure.Scaled(Rational(2)) &&
               MomentsOf(s.mu1, d.basis) == target &&
               MomentsOf(s.mu2, d.basis) == target && d.witness_dimension == 1;
  return d;
}

}  // namespace ceptool
