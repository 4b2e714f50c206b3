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

#include "ceptool/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "ceptool/ce_check.hpp"
#include "ceptool/cycles.hpp"
#include "ceptool/ergodic.hpp"
#include "ceptool/moments.hpp"
#include "ceptool/nash.hpp"

namespace ceptool {

CycleComparison CompareVerticesWithCycles(const FiniteGame& game,
                                          bool check_adjacency) {
  CycleComparison out;
  const HPolytope p = CeHRep(game);
  VertexEnumeration ve = EnumerateVertices(p);
  out.vertices = std::move(ve.vertex_set);
  out.vertex_count = out.vertices.vertices.size();
  out.verify_error = VerifyVertexSet(p, out.vertices, check_adjacency);
  out.classes = ClassifyVertices(game, out.vertices);

  std::set<RationalVector> cycles;
  for (const FiniteMeasure& mu : EnumerateExtremeCe(game)) {
    cycles.insert(MeasureToCoordinates(game, mu.Normalized()));
  }
  out.cycle_count = cycles.size();
  const std::set<RationalVector> verts(out.vertices.vertices.begin(),
                                       out.vertices.vertices.end());
  out.equal = ve.feasible && verts == cycles;
  return out;
}

namespace {

ReportRow Timed(std::string name, const std::function<bool(std::string&)>& body) {
  ReportRow row;
  row.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    row.pass = body(row.detail);
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("exception: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<ReportRow> RunReport(bool big) {
  std::vector<ReportRow> rows;
  const int max_n = big ? 3 : 2;

  rows.push_back(Timed("extreme Nash count = n^4, n = 1..4", [](std::string& d) {
    for (int n = 1; n <= 4; ++n) {
      const auto pairs = EnumerateExtremeNash(MakeUniformExampleGame(n));
      d += std::to_string(pairs.size()) + " ";
      if (BigInt(static_cast<long>(pairs.size())) != CountExtremeNash(n)) return false;
    }
    return true;
  }));

  rows.push_back(Timed("extreme CE count e(n) = enumeration", [max_n](std::string& d) {
    for (int n = 1; n <= max_n; ++n) {
      const auto ce = EnumerateExtremeCe(MakeUniformExampleGame(n));
      d += std::to_string(ce.size()) + " ";
      if (BigInt(static_cast<long>(ce.size())) != CountExtremeCe(n)) return false;
    }
    for (int n = 1; n <= 100; ++n) CountExtremeCe(n);  // integrality
    return true;
  }));

  for (int n = 1; n <= max_n; ++n) {
    rows.push_back(Timed("vertices = normalized cycles, n = " + std::to_string(n),
                         [n](std::string& d) {
      const auto c = CompareVerticesWithCycles(MakeUniformExampleGame(n), n <= 2);
      d = std::to_string(c.vertex_count) + " vertices, " +
          std::to_string(c.classes.product.size()) + " product, " +
          std::to_string(c.classes.cycle.size()) + " cycle, " +
          std::to_string(c.classes.other.size()) + " other";
      if (!c.verify_error.empty()) d += "; " + c.verify_error;
      return c.equal && c.verify_error.empty() && c.classes.other.empty() &&
             BigInt(static_cast<long>(c.classes.product.size())) == CountExtremeNash(n);
    }));
  }

  rows.push_back(Timed("1 <= f(n) <= 23/7 and term ratios <= 1/8, n <= 100",
                       [](std::string&) {
    for (int n = 1; n <= 100; ++n) {
      const Rational f = FRatio(n);
      if (f < Rational(1) || f > Rational(23, 7)) return false;
      const auto t = FRatioTerms(n);
      for (int s = 1; s + 1 < n; ++s) {
        if (t[static_cast<std::size_t>(s + 1)] / t[static_cast<std::size_t>(s)] >
            Rational(1, 8)) {
          return false;
        }
      }
    }
    return true;
  }));

  rows.push_back(Timed("cycle measures pass both CE tests, witness dim 1",
                       [max_n](std::string&) {
    for (int n = 1; n <= max_n; ++n) {
      const FiniteGame g = MakeUniformExampleGame(n);
      for (const CyclePattern& p : EnumerateExtremeCePatterns(g)) {
        const FiniteMeasure mu = CycleMeasure(p);
        if (!IsCeDefinition(g, mu) || !IsCeProjection(g, mu)) return false;
        if (ExtremalityWitnessDimension(p) != 1) return false;
      }
    }
    return true;
  }));

  rows.push_back(Timed("rotation equilibrium residuals <= 1e-6", [](std::string& d) {
    const auto r = ConditionalMeanResiduals(RotationParams::Sqrt5(0.2, 0.8, 1.0), 16, 10000);
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda_x %.3g, lambda_y %.3g", r.lambda_x, r.lambda_y);
    d = buf;
    return r.lambda_x <= 1e-6 && r.lambda_y <= 1e-6;
  }));

  rows.push_back(Timed("orbit equidistribution contrast", [](std::string& d) {
    const double irr = EquidistributionDiscrepancy(RotationParams::Sqrt5(0.2, 0.8, 1.0), 100000, 20);
    const double rat = EquidistributionDiscrepancy(
        RotationParams::WithRotationNumber(0.2, 0.8, 1, 4), 100000, 20);
    char buf[96];
    std::snprintf(buf, sizeof buf, "irrational %.3g, rotation 1/4 %.3g", irr, rat);
    d = buf;
    return irr <= 0.01 && rat >= 0.5;
  }));

  rows.push_back(Timed("rational orbits give extreme cycles, q = 1, 2, 3",
                       [](std::string&) {
    for (int q = 1; q <= 3; ++q) {
      const RationalRotation rot{Rational(1, 5), Rational(4, 5), Rational(3, 5) / Rational(q)};
      const CyclePattern p = RationalOrbitToCycle(rot, Rational(1, 5));
      if (p.k() != 2 * q || ExtremalityWitnessDimension(p) != 1) return false;
      if (!QuadrantMapPreservesKappa(rot, CycleMeasure(p))) return false;
    }
    return true;
  }));

  rows.push_back(Timed("moment splitting of extreme cycles, d = 1..8", [](std::string&) {
    for (std::size_t d = 1; d <= 8; ++d) {
      if (!NonDescribabilityDemo(d).verified) return false;
    }
    return true;
  }));

  return rows;
}

std::string FormatReport(const std::vector<ReportRow>& rows) {
  std::string out;
  std::size_t passed = 0;
  for (const ReportRow& r : rows) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-4s  %-52s  %s\n", r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.detail.c_str());
    out += buf;
    passed += r.pass;
  }
  out += std::to_string(passed) + "/" + std::to_string(rows.size()) + " checks passed\n";
  return out;
}

}  // namespace ceptool
