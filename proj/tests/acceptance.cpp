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

// One PASS/FAIL line per acceptance criterion, with timings. Exit status is
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "ceptool/ce_check.hpp"
#include "ceptool/cycles.hpp"
#include "ceptool/ergodic.hpp"
#include "ceptool/moments.hpp"
#include "ceptool/nash.hpp"
#include "ceptool/polytope.hpp"
#include "ceptool/report.hpp"
#include "ceptool/svg.hpp"

using namespace ceptool;

namespace {

// Pinned tolerances and budgets.
constexpr double kResidualTol = 1e-6;
constexpr std::size_t kResidualBins = 16;
constexpr std::size_t kQuadPoints = 10000;
constexpr double kIrrationalDiscrepancyMax = 0.01;
constexpr double kRationalDiscrepancyMin = 0.5;
constexpr std::size_t kOrbitSteps = 100000;
constexpr std::size_t kOrbitBins = 20;
constexpr double kPlotTol = 1e-9;
constexpr int kRandomMeasuresPerSize = 1000;

constexpr double kBudgetFast = 1.0;        // criteria 1, 2, 5
constexpr double kBudgetOracle = 300.0;    // criterion 3, n <= 2
constexpr double kBudgetOracleBig = 7200;  // criterion 3, n = 3
constexpr double kBudgetCeValidity = 60.0;
constexpr double kBudgetErgodic = 10.0;
constexpr double kBudgetMoments = 60.0;

Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void Run(int id, const std::string& name, double budget,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double s = Seconds(start);
  if (budget > 0 && s > budget) {
    ok = false;
    detail += " (over budget " + std::to_string(budget) + " s)";
  }
  failures += !ok;
  std::printf("%s  %2d  %-48s %8.3f s  %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), s,
              detail.c_str());
  std::fflush(stdout);
}

// Vertex sets shared by criteria 3, 4 and 6.
std::map<int, CycleComparison> comparisons;

const CycleComparison& Comparison(int n) {
  auto it = comparisons.find(n);
  if (it == comparisons.end()) {
    it = comparisons.emplace(n, CompareVerticesWithCycles(MakeUniformExampleGame(n), n <= 2))
             .first;
  }
  return it->second;
}

FiniteGame GameOf(const CyclePattern& p) {
  std::set<Rational> xs(p.xs().begin(), p.xs().end());
  std::set<Rational> ys(p.ys().begin(), p.ys().end());
  return FiniteGame({xs.begin(), xs.end()}, {ys.begin(), ys.end()});
}

std::string Join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

bool Near(double a, double b) { return std::abs(a - b) <= kPlotTol; }

std::vector<std::pair<double, double>> SvgDots(const std::string& svg) {
  static const std::regex re(R"re(<circle class="atom" cx="([^"]+)" cy="([^"]+)")re");
  std::vector<std::pair<double, double>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
  }
  return out;
}

std::vector<Segment> SvgLines(const std::string& svg) {
  static const std::regex re(
      R"re(<line class="support" x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)")re");
  std::vector<Segment> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]),
                   std::stod((*it)[4])});
  }
  return out;
}

// Staircase support from the odd-indexed values:
// (x1, y1), (x1, y3), (x3, y3), (x3, y5), ...
bool StaircaseMatches(const std::string& svg, const std::vector<double>& ox,
                      const std::vector<double>& oy) {
  std::vector<std::pair<double, double>> want;
  const std::size_t k = ox.size();
  for (std::size_t i = 0; i < k; ++i) {
    want.emplace_back(ox[i], oy[i]);
    want.emplace_back(ox[i], oy[(i + 1) % k]);
  }
  auto got = SvgDots(svg);
  if (got.size() != want.size()) return false;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!Near(got[i].first, want[i].first) || !Near(got[i].second, want[i].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  Run(1, "extreme Nash count n^4, n = 1..4", kBudgetFast, [](std::string& d) {
    bool ok = true;
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 4; ++n) {
      counts.push_back(EnumerateExtremeNash(MakeUniformExampleGame(n)).size());
      ok = ok && counts.back() == static_cast<std::size_t>(n * n * n * n);
    }
    d = Join(counts);
    return ok;
  });

  Run(2, "closed-form CE count 1, 24, 1161; integral n<=100", kBudgetFast,
      [](std::string& d) {
    const bool small = CountExtremeCe(1) == BigInt(1) && CountExtremeCe(2) == BigInt(24) &&
                       CountExtremeCe(3) == BigInt(1161);
    for (int n = 1; n <= 100; ++n) CountExtremeCe(n);  // throws if not integral
    d = "e(4) = " + CountExtremeCe(4).get_str();
    return small;
  });

  Run(3, "vertex set = normalized cycle set, n = 1, 2", kBudgetOracle, [](std::string& d) {
    bool ok = true;
    for (int n = 1; n <= 2; ++n) {
      const CycleComparison& c = Comparison(n);
      d += std::to_string(c.vertex_count) + "/" + std::to_string(c.cycle_count) + " ";
      ok = ok && c.equal && c.verify_error.empty();
    }
    return ok && Comparison(2).vertex_count == 24;
  });

  Run(3, "vertex set = normalized cycle set, n = 3", kBudgetOracleBig, [](std::string& d) {
    const CycleComparison& c = Comparison(3);
    d = std::to_string(c.vertex_count) + "/" + std::to_string(c.cycle_count);
    return c.equal && c.verify_error.empty() && c.vertex_count == 1161;
  });

  Run(4, "n = 2: 16 Nash products, 8 others", 0, [](std::string& d) {
    const FiniteGame g = MakeUniformExampleGame(2);
    const CycleComparison& c = Comparison(2);
    // Products of extreme Nash pairs, computed independently of the
    // classifier.
    std::set<RationalVector> products;
    for (const NashPair& p : EnumerateExtremeNash(g)) {
      products.insert(MeasureToCoordinates(g, ProductMeasure(p.sigma, p.tau)));
    }
    std::size_t in = 0;
    for (const RationalVector& v : c.vertices.vertices) in += products.count(v);
    d = std::to_string(in) + " products, " + std::to_string(c.vertex_count - in) + " not";
    return products.size() == 16 && in == 16 && c.vertex_count - in == 8 &&
           c.classes.product.size() == 16 && c.classes.cycle.size() == 8 &&
           c.classes.other.empty();
  });

  Run(5, "1 <= f(n) <= 23/7, term ratio <= 1/8, n <= 100", kBudgetFast, [](std::string& d) {
    Rational lo = FRatio(1), hi = FRatio(1), worst_ratio(0);
    for (int n = 1; n <= 100; ++n) {
      const Rational f = FRatio(n);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
      const auto t = FRatioTerms(n);
      for (int s = 1; s + 1 < n; ++s) {
        worst_ratio = std::max(worst_ratio, t[static_cast<std::size_t>(s + 1)] /
                                                t[static_cast<std::size_t>(s)]);
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "f in [%.6f, %.6f], max ratio %.6f", lo.to_double(),
                  hi.to_double(), worst_ratio.to_double());
    d = buf;
    return lo >= Q(1) && hi <= Q(23, 7) && worst_ratio <= Q(1, 8);
  });

  Run(6, "CE validity of both routes; random agreement", kBudgetCeValidity,
      [](std::string& d) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      const FiniteGame g = MakeUniformExampleGame(n);
      for (const FiniteMeasure& mu : EnumerateExtremeCe(g)) {
        ok = ok && IsCeDefinition(g, mu) && IsCeProjection(g, mu);
      }
      for (const RationalVector& v : Comparison(n).vertices.vertices) {
        const FiniteMeasure mu = CoordinatesToMeasure(g, v);
        ok = ok && IsCeDefinition(g, mu) && IsCeProjection(g, mu);
      }
    }
    // Random measures: conic combinations of extreme CEs (inside the cone),
    // the same with one perturbed atom (usually outside), and random grid
    // measures.
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> small(1, 9);
    int agree = 0, total = 0, positives = 0;
    for (int n = 1; n <= 3; ++n) {
      const FiniteGame g = MakeUniformExampleGame(n);
      const auto extreme = EnumerateExtremeCe(g);
      std::uniform_int_distribution<std::size_t> pick(0, extreme.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_x(0, g.cx().size() - 1);
      std::uniform_int_distribution<std::size_t> pick_y(0, g.cy().size() - 1);
      for (int trial = 0; trial < kRandomMeasuresPerSize; ++trial) {
        FiniteMeasure mu;
        const int kind = trial % 3;
        if (kind < 2) {
          const int terms = 1 + trial % 4;
          for (int t = 0; t < terms; ++t) {
            mu += extreme[pick(rng)].Scaled(Q(small(rng), small(rng)));
          }
          if (kind == 1) mu.Add({g.cx()[pick_x(rng)], g.cy()[pick_y(rng)]}, Q(1, small(rng)));
        } else {
          for (const Rational& x : g.cx()) {
            for (const Rational& y : g.cy()) {
              if (small(rng) <= 4) mu.Add({x, y}, Q(small(rng), small(rng)));
            }
          }
          if (mu.empty()) mu.Add({g.cx().front(), g.cy().front()}, Q(1));
        }
        const bool def = IsCeDefinition(g, mu);
        agree += def == IsCeProjection(g, mu);
        positives += def;
        ++total;
      }
    }
    d = std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
        std::to_string(positives) + " CE";
    return ok && agree == total;
  });

  Run(7, "extremality witness dimension 1, n <= 3", 0, [](std::string& d) {
    std::size_t count = 0;
    for (int n = 1; n <= 3; ++n) {
      for (const CyclePattern& p : EnumerateExtremeCePatterns(MakeUniformExampleGame(n))) {
        if (ExtremalityWitnessDimension(p) != 1) return false;
        ++count;
      }
    }
    d = std::to_string(count) + " patterns";
    return true;
  });

  Run(8, "rotation equilibrium residuals <= 1e-6", kBudgetErgodic, [](std::string& d) {
    const Residuals r = ConditionalMeanResiduals(RotationParams::Sqrt5(0.2, 0.8, 1.0),
                                                 kResidualBins, kQuadPoints);
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda_x %.3g, lambda_y %.3g", r.lambda_x, r.lambda_y);
    d = buf;
    return r.lambda_x <= kResidualTol && r.lambda_y <= kResidualTol;
  });

  Run(9, "equidistribution: irrational <= 0.01, 1/4 >= 0.5", kBudgetErgodic,
      [](std::string& d) {
    const double irr = EquidistributionDiscrepancy(RotationParams::Sqrt5(0.2, 0.8, 1.0),
                                                   kOrbitSteps, kOrbitBins);
    const double rat = EquidistributionDiscrepancy(
        RotationParams::WithRotationNumber(0.2, 0.8, 1, 4), kOrbitSteps, kOrbitBins);
    char buf[96];
    std::snprintf(buf, sizeof buf, "irrational %.3g, rotation 1/4 %.3g", irr, rat);
    d = buf;
    return irr <= kIrrationalDiscrepancyMax && rat >= kRationalDiscrepancyMin;
  });

  Run(10, "rational orbits give extreme cycles, p/q = 1/1..1/3", 0, [](std::string& d) {
    for (int q = 1; q <= 3; ++q) {
      const RationalRotation rot{Q(1, 5), Q(4, 5), Q(3, 5) / Q(q)};
      const CyclePattern p = RationalOrbitToCycle(rot, Q(3, 10));
      const FiniteMeasure mu = CycleMeasure(p);
      const FiniteGame g = GameOf(p);
      d += "k=" + std::to_string(p.k()) + " ";
      if (p.k() != 2 * q || ExtremalityWitnessDimension(p) != 1) return false;
      if (!IsCeDefinition(g, mu) || !IsCeProjection(g, mu)) return false;
      if (!QuadrantMapPreservesKappa(rot, mu)) return false;
    }
    return true;
  });

  Run(11, "exact moment splits, d < 4r, d <= 8, r <= 3", kBudgetMoments, [](std::string& d) {
    // Graded-lex bases plus random bases of distinct monomials of degree <= 3.
    std::vector<Monomial> pool;
    for (unsigned deg = 0; deg <= 3; ++deg) {
      for (unsigned q = 0; q <= deg; ++q) pool.push_back({deg - q, q});
    }
    std::mt19937_64 rng(7);
    std::size_t splits = 0;
    for (int n = 1; n <= 3; ++n) {
      for (const CyclePattern& p : EnumerateExtremeCePatterns(MakeUniformExampleGame(n))) {
        const FiniteMeasure mu = CycleMeasure(p);
        const std::size_t atoms = mu.size();
        if (atoms % 4 != 0 || atoms / 4 > 3) continue;
        for (std::size_t dim = 1; dim <= 8 && dim < atoms; ++dim) {
          std::shuffle(pool.begin(), pool.end(), rng);
          for (const MomentBasis& basis :
               {MomentBasis::GradedLex(dim),
                MomentBasis(std::vector<Monomial>(pool.begin(), pool.begin() + dim))}) {
            const MomentSplit s = CaratheodorySplit(mu, basis);
            const auto target = MomentsOf(mu, basis);
            if (s.extreme_for_basis || s.mu1 == s.mu2 ||
                s.mu1 + s.mu2 != mu.Scaled(Q(2)) || MomentsOf(s.mu1, basis) != target ||
                MomentsOf(s.mu2, basis) != target) {
              d = "failed for basis " + basis.ToString();
              return false;
            }
            ++splits;
          }
        }
      }
    }
    d = std::to_string(splits) + " splits";
    return true;
  });

  Run(12, "plots match reference coordinates to 1e-9", 0, [](std::string& d) {
    const bool same = StaircaseK2Svg() == StaircaseK2Svg() && StaircaseK4Svg() == StaircaseK4Svg() &&
                      RotationSupportSvg() == RotationSupportSvg();
    const bool one = StaircaseMatches(StaircaseK2Svg(), {0.4, -0.6}, {0.2, -0.8});
    const bool two =
        StaircaseMatches(StaircaseK4Svg(), {0.4, -0.4, 0.6, -0.6}, {0.6, -0.4, 0.4, -0.6});
    const double s = 1 / std::sqrt(5.0);
    const std::vector<Segment> want = {
        {0.2, -0.2, 0.8, -0.8},       {-0.2, -0.2, -0.8, -0.8},     {-0.2, 0.2, -0.8, 0.8},
        {0.2, 0.2 + s, 0.8 - s, 0.8}, {0.8 - s, 0.2, 0.8, 0.2 + s},
    };
    const auto got = SvgLines(RotationSupportSvg());
    bool three = got.size() == want.size();
    for (std::size_t i = 0; three && i < want.size(); ++i) {
      three = Near(got[i].x0, want[i].x0) && Near(got[i].y0, want[i].y0) &&
              Near(got[i].x1, want[i].x1) && Near(got[i].y1, want[i].y1);
    }
    d = std::string("k2 ") + (one ? "ok" : "bad") + ", k4 " + (two ? "ok" : "bad") +
        ", rotation " + (three ? "ok" : "bad");
    return same && one && two && three;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
  return failures == 0 ? 0 : 1;
}
