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

#include "ceptool/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ceptool/linalg.hpp"
#include "ceptool/parallel.hpp"

namespace ceptool {

namespace {

void CheckDistinctAlternating(const std::vector<Rational>& odd, const char* axis) {
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const Rational& cur = odd[i];
    const Rational& next = odd[(i + 1) % odd.size()];
    if (cur.sign() == next.sign()) {
      throw PatternError(std::string("cycle condition violated: odd-indexed ") +
                         axis + " values must alternate in sign");
    }
  }
  std::vector<Rational> sorted(odd);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PatternError(std::string("cycle condition violated: odd-indexed ") +
                       axis + " values must be distinct");
  }
}

std::vector<Rational> OddEntries(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  out.reserve(v.size() / 2);
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}

}  // namespace

CyclePattern::CyclePattern(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t len = xs_.size();
  if (len != ys_.size()) {
    throw PatternError("cycle pattern needs equally long x and y sequences");
  }
  if (len == 0 || len % 4 != 0) {
    throw PatternError("cycle pattern length must be 2k with k even and positive");
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (xs_[i].is_zero() || ys_[i].is_zero()) {
      throw PatternError("cycle condition violated: all coordinates must be nonzero");
    }
  }
  // 0-based: xs[2i+1] == xs[2i] and ys[2i+1] == ys[2i+2 mod len].
  for (std::size_t i = 0; i < len; i += 2) {
    if (xs_[i + 1] != xs_[i]) {
      throw PatternError("cycle condition violated: x_{2i} must equal x_{2i-1}");
    }
    if (ys_[i + 1] != ys_[(i + 2) % len]) {
      throw PatternError("cycle condition violated: y_{2i} must equal y_{2i+1}");
    }
  }
  CheckDistinctAlternating(OddEntries(xs_), "x");
  CheckDistinctAlternating(OddEntries(ys_), "y");
}

CyclePattern CyclePattern::FromOddValues(const std::vector<Rational>& odd_xs,
                                         const std::vector<Rational>& odd_ys) {
  const std::size_t k = odd_xs.size();
  if (odd_ys.size() != k || k == 0) {
    throw PatternError("cycle pattern needs k odd-indexed values on each axis");
  }
  std::vector<Rational> xs(2 * k), ys(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[2 * i] = xs[2 * i + 1] = odd_xs[i];
    ys[2 * i] = odd_ys[i];
    ys[2 * i + 1] = odd_ys[(i + 1) % k];
  }
  return CyclePattern(std::move(xs), std::move(ys));
}

std::vector<Rational> CyclePattern::odd_xs() const { return OddEntries(xs_); }
std::vector<Rational> CyclePattern::odd_ys() const { return OddEntries(ys_); }

FiniteMeasure CycleMeasure(const CyclePattern& p) {
  FiniteMeasure mu;
  for (std::size_t i = 0; i < p.length(); ++i) {
    mu.Add(p.point(i), (p.xs()[i] * p.ys()[i]).abs().inverse());
  }
  return mu;
}

CyclePattern CanonicalForm(const CyclePattern& p) {
  const std::size_t len = p.length();
  std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> best;
  std::vector<Rational> xs(len), ys(len);
  for (int reversed = 0; reversed < 2; ++reversed) {
    for (std::size_t shift = 0; shift < len; shift += 2) {
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t src =
            reversed ? (len - 1 - (i + shift) % len) : (i + shift) % len;
        xs[i] = p.xs()[src];
        ys[i] = p.ys()[src];
      }
      if (xs[0].sign() <= 0 || ys[0].sign() <= 0) continue;
      if (!best || std::tie(xs, ys) < std::tie(best->first, best->second)) {
        best.emplace(xs, ys);
      }
    }
  }
  // Some image always has x_1, y_1 > 0; constructing re-validates it.
  return CyclePattern(std::move(best->first), std::move(best->second));
}

std::optional<CyclePattern> PatternOfMeasure(const FiniteMeasure& mu) {
  if (mu.empty()) return std::nullopt;
  std::map<Rational, std::vector<Point>> by_x, by_y;
  for (const auto& [p, w] : mu.atoms()) {
    by_x[p.x].push_back(p);
    by_y[p.y].push_back(p);
  }
  for (const auto& [v, pts] : by_x) if (pts.size() != 2) return std::nullopt;
  for (const auto& [v, pts] : by_y) if (pts.size() != 2) return std::nullopt;

  auto partner = [](const std::vector<Point>& pair, const Point& p) {
    return pair[0] == p ? pair[1] : pair[0];
  };
  std::vector<Rational> xs, ys;
  const Point start = mu.atoms().begin()->first;
  Point cur = start;
  do {
    xs.push_back(cur.x);
    ys.push_back(cur.y);
    const Point across = partner(by_x[cur.x], cur);
    xs.push_back(across.x);
    ys.push_back(across.y);
    cur = partner(by_y[across.y], across);
  } while (cur != start && xs.size() <= mu.size());
  if (xs.size() != mu.size()) return std::nullopt;

  try {
    CyclePattern pattern = CanonicalForm(CyclePattern(xs, ys));
    if (CycleMeasure(pattern).Normalized() != mu.Normalized()) {
      return std::nullopt;
    }
    return pattern;
  } catch (const PatternError&) {
    return std::nullopt;
  }
}

namespace {

// All ordered r-tuples of distinct elements of `pool`.
void OrderedTuples(const std::vector<Rational>& pool, std::size_t r,
                   std::vector<std::vector<Rational>>& out) {
  std::vector<Rational> cur;
  std::vector<bool> used(pool.size(), false);
  std::function<void()> rec = [&] {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(pool[i]);
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
}

std::vector<Rational> Interleave(const std::vector<Rational>& pos,
                                 const std::vector<Rational>& neg) {
  std::vector<Rational> out;
  out.reserve(2 * pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    out.push_back(pos[i]);
    out.push_back(neg[i]);
  }
  return out;
}

void SplitSigns(const std::vector<Rational>& values, std::vector<Rational>& pos,
                std::vector<Rational>& neg) {
  for (const Rational& v : values) {
    if (v.is_zero()) {
      throw InputError("cycle enumeration requires games without a zero strategy");
    }
    (v.sign() > 0 ? pos : neg).push_back(v);
  }
}

}  // namespace

std::vector<CyclePattern> EnumerateExtremeCePatterns(const FiniteGame& game) {
  std::vector<Rational> px, nx, py, ny;
  SplitSigns(game.cx(), px, nx);
  SplitSigns(game.cy(), py, ny);
  const std::size_t max_r =
      std::min({px.size(), nx.size(), py.size(), ny.size()});

  // One bucket per r; each cycle uses r values from every sign class.
  std::vector<std::set<CyclePattern>> buckets(max_r);
  ParallelFor(max_r, [&](std::size_t idx) {
    const std::size_t r = idx + 1;
    std::vector<std::vector<Rational>> tpx, tnx, tpy, tny;
    OrderedTuples(px, r, tpx);
    OrderedTuples(nx, r, tnx);
    OrderedTuples(py, r, tpy);
    OrderedTuples(ny, r, tny);
    auto& bucket = buckets[idx];
    for (const auto& a : tpx) {
      for (const auto& b : tnx) {
        const auto odd_x = Interleave(a, b);
        for (const auto& c : tpy) {
          for (const auto& d : tny) {
            bucket.insert(CanonicalForm(
                CyclePattern::FromOddValues(odd_x, Interleave(c, d))));
          }
        }
      }
    }
  });

  std::set<CyclePattern> all;
  for (auto& b : buckets) all.merge(b);
  return {all.begin(), all.end()};
}

std::vector<FiniteMeasure> EnumerateExtremeCe(const FiniteGame& game) {
  std::vector<FiniteMeasure> out;
  for (const CyclePattern& p : EnumerateExtremeCePatterns(game)) {
    out.push_back(CycleMeasure(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BigInt Factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt FallingFactorial(int n, int r) { return Factorial(n) / Factorial(n - r); }

}  // namespace

BigInt CountExtremeCe(int n) {
  if (n < 1) throw InputError("n must be positive");
  Rational total;
  for (int r = 1; r <= n; ++r) {
    total += Pow(Rational(FallingFactorial(n, r)), 4) / Rational(r);
  }
  if (!total.is_integer()) {
    throw std::logic_error("extreme correlated equilibrium count for n=" +
                           std::to_string(n) + " is not an integer: " +
                           total.ToString());
  }
  return total.numerator();
}

Rational FRatio(int n) {
  const BigInt e = CountExtremeCe(n);
  const Rational last = Pow(Rational(Factorial(n)), 4) / Rational(n);
  return Rational(e) / last;
}

std::vector<Rational> FRatioTerms(int n) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<Rational> terms;
  terms.reserve(n);
  for (int s = 0; s < n; ++s) {
    terms.push_back(Rational(n, n - s) / Pow(Rational(Factorial(s)), 4));
  }
  return terms;
}

std::size_t ExtremalityWitnessDimension(const CyclePattern& p) {
  const std::size_t len = p.length();
  RationalMatrix rows;
  rows.reserve(len);
  // 1-based pairs (2i-1, 2i) share x; (2i, 2i+1) share y. In 0-based form:
  // y-balance on (2j, 2j+1), x-balance on (2j+1, 2j+2 mod len).
  for (std::size_t j = 0; j < len; j += 2) {
    RationalVector y_row(len), x_row(len);
    y_row[j] = p.ys()[j];
    y_row[j + 1] = p.ys()[j + 1];
    x_row[(j + 2) % len] = p.xs()[(j + 2) % len];
    x_row[j + 1] = p.xs()[j + 1];
    rows.push_back(std::move(y_row));
    rows.push_back(std::move(x_row));
  }
  return len - Rank(rows, len);
}

}  // namespace ceptool
