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

// Command-line front end. Exit status: 0 success, 1 failed validation,
// 2 bad input.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ceptool/ce_check.hpp"
#include "ceptool/cycles.hpp"
#include "ceptool/ergodic.hpp"
#include "ceptool/kernels.hpp"
#include "ceptool/moments.hpp"
#include "ceptool/nash.hpp"
#include "ceptool/polytope.hpp"
#include "ceptool/report.hpp"
#include "ceptool/serialization.hpp"
#include "ceptool/svg.hpp"

namespace {

using namespace ceptool;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct GameSource {
  std::string file;
  int n = 0;

  void Attach(CLI::App* app) {
    auto* g = app->add_option("--game", file, "game JSON {\"cx\": [...], \"cy\": [...]}");
    auto* nn = app->add_option("--n", n, "uniform example game with values +-i/n")
                   ->check(CLI::PositiveNumber);
    g->excludes(nn);
  }

  FiniteGame Load() const {
    if (!file.empty()) return GameFromJson(ReadJsonFile(file));
    if (n > 0) return MakeUniformExampleGame(n);
    throw InputError("one of --game or --n is required");
  }
};

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string Fmt(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

int RunNash(const GameSource& src) {
  const FiniteGame game = src.Load();
  const auto pairs = EnumerateExtremeNash(game);
  for (const NashPair& p : pairs) {
    std::cout << Json{{"sigma", ToJson(p.sigma)}, {"tau", ToJson(p.tau)}}.dump() << "\n";
  }
  std::cout << pairs.size() << " extreme Nash "
            << (pairs.size() == 1 ? "equilibrium" : "equilibria") << "\n";
  for (const NashPair& p : pairs) {
    if (!IsNash(game, p.sigma, p.tau)) return kFailed;
  }
  return kOk;
}

int RunCycles(const GameSource& src, const std::string& out_file,
              const std::string& svg_dir) {
  const FiniteGame game = src.Load();
  const auto patterns = EnumerateExtremeCePatterns(game);
  std::cout << patterns.size() << " extreme correlated "
            << (patterns.size() == 1 ? "equilibrium" : "equilibria") << "\n";
  int status = kOk;
  if (src.file.empty()) {
    const BigInt expected = CountExtremeCe(src.n);
    if (expected != BigInt(static_cast<long>(patterns.size()))) {
      std::cout << "closed-form count " << expected.get_str() << " DIFFERS\n";
      status = kFailed;
    }
  }
  if (!out_file.empty()) {
    Json arr = Json::array();
    for (const CyclePattern& p : patterns) {
      arr.push_back({{"pattern", ToJson(p)}, {"measure", ToJson(CycleMeasure(p))}});
    }
    WriteFile(out_file, arr.dump(1) + "\n");
  }
  if (!svg_dir.empty()) {
    std::filesystem::create_directories(svg_dir);
    const std::filesystem::path dir(svg_dir);
    WriteFile(dir / "staircase-k2.svg", StaircaseK2Svg());
    WriteFile(dir / "staircase-k4.svg", StaircaseK4Svg());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "cycle-%04zu.svg", i);
      WriteFile(dir / name, SupportSvg(CycleMeasure(patterns[i]),
                                       "cycle " + std::to_string(i) + ", k = " +
                                           std::to_string(patterns[i].k())));
    }
  }
  return status;
}

int RunVertices(const GameSource& src, bool compare, bool dump) {
  const FiniteGame game = src.Load();
  const CycleComparison c = CompareVerticesWithCycles(game, true);
  const std::size_t n = c.vertex_count;
  std::string line = std::to_string(n) + (n == 1 ? " vertex" : " vertices");
  if (compare) line += c.equal ? "; sets EQUAL" : "; sets DIFFER";
  std::cout << line << "\n";
  std::cout << "product of extreme Nash: " << c.classes.product.size()
            << "\ncycle, not product: " << c.classes.cycle.size()
            << "\nother: " << c.classes.other.size() << "\n";
  if (!c.verify_error.empty()) std::cout << "vertex check failed: " << c.verify_error << "\n";
  if (dump) {
    for (const RationalVector& v : c.vertices.vertices) {
      std::cout << ToJson(CoordinatesToMeasure(game, v)).dump() << "\n";
    }
  }
  const bool ok = c.verify_error.empty() && (!compare || c.equal);
  return ok ? kOk : kFailed;
}

int RunCheck(const GameSource& src, const std::string& measure_file,
             const std::string& method) {
  const FiniteGame game = src.Load();
  const FiniteMeasure mu = MeasureFromJson(ReadJsonFile(measure_file));
  const CeVerdict v = method == "proj" ? CheckCeProjection(game, mu)
                                       : CheckCeDefinition(game, mu);
  if (v.is_equilibrium) {
    std::cout << "PASS\n";
    return kOk;
  }
  std::cout << "FAIL\n";
  if (v.witness) std::cout << "witness: " << v.witness->description << "\n";
  return kFailed;
}

struct ErgodicArgs {
  std::string a = "0.2";
  std::string b = "0.8";
  std::string alpha_num = "1";
  std::vector<std::string> alpha_form = {"sqrt5"};
  std::size_t samples = 0;
  std::uint64_t seed = 20260101;
  std::size_t bins = 16;
  std::size_t quad_points = 10000;
  std::size_t orbit = 100000;
  std::size_t orbit_bins = 20;
  double tolerance = 1e-6;
  bool clockwise = false;
  std::string svg;
};

int RunErgodic(const ErgodicArgs& args) {
  const Rational a = Rational::Parse(args.a), b = Rational::Parse(args.b);
  RotationParams params;
  std::optional<RationalRotation> exact;
  const std::string& form = args.alpha_form.at(0);
  if (form == "sqrt5") {
    if (args.alpha_form.size() != 1) throw InputError("--alpha-form sqrt5 takes no value");
    params = RotationParams::Sqrt5(a.to_double(), b.to_double(),
                                   Rational::Parse(args.alpha_num).to_double());
  } else if (form == "rational") {
    if (args.alpha_form.size() != 2) throw InputError("--alpha-form rational needs P/Q");
    const Rational pq = Rational::Parse(args.alpha_form[1]);
    exact = RationalRotation{a, b, (b - a) * pq};
    params = exact->ToParams();
  } else {
    throw InputError("--alpha-form must be sqrt5 or rational P/Q");
  }
  params.clockwise = args.clockwise;
  params.Validate();

  std::cout << "kernel: " << kernels::IsaName(kernels::ActiveIsa()) << "\n";
  std::cout << "a = " << Fmt("%.15g", params.a) << ", b = " << Fmt("%.15g", params.b)
            << ", alpha = " << Fmt("%.15g", params.alpha) << "\n";
  for (const Segment& s : SupportSegments(params)) {
    std::cout << "segment (" << Fmt("%.12g", s.x0) << ", " << Fmt("%.12g", s.y0)
              << ") to (" << Fmt("%.12g", s.x1) << ", " << Fmt("%.12g", s.y1) << ")\n";
  }
  const auto exact_mass = QuadrantMassesExact(params);
  const auto quad_mass = QuadrantMassesQuadrature(params, args.quad_points);
  for (int q = 0; q < 4; ++q) {
    std::cout << "Q" << q + 1 << " mass " << Fmt("%.12g", exact_mass[q])
              << " (quadrature " << Fmt("%.12g", quad_mass[q]) << ")\n";
  }
  const Residuals r = ConditionalMeanResiduals(params, args.bins, args.quad_points);
  const bool residual_ok = r.lambda_x <= args.tolerance && r.lambda_y <= args.tolerance;
  std::cout << "residuals lambda_x " << Fmt("%.3e", r.lambda_x) << ", lambda_y "
            << Fmt("%.3e", r.lambda_y) << (residual_ok ? " PASS" : " FAIL") << "\n";
  if (args.orbit >= args.orbit_bins * args.orbit_bins) {
    std::cout << "orbit discrepancy "
              << Fmt("%.6g", EquidistributionDiscrepancy(params, args.orbit, args.orbit_bins))
              << "\n";
  }

  bool ok = residual_ok;
  if (exact) {
    const CyclePattern p = RationalOrbitToCycle(*exact, exact->a);
    const std::size_t dim = ExtremalityWitnessDimension(p);
    const bool kappa = QuadrantMapPreservesKappa(*exact, CycleMeasure(p));
    std::cout << "orbit of a: k = " << p.k() << ", witness dimension " << dim
              << (kappa ? ", quadrant map preserves |kappa|" : ", quadrant map BREAKS |kappa|")
              << "\n"
              << ToJson(p).dump() << "\n";
    ok = ok && dim == 1 && kappa;
  }

  if (args.samples > 0) {
    const auto pts = Sample(params, args.samples, args.seed);
    double max_dist = 0.0, sum_y = 0.0;
    std::size_t right = 0;
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const SamplePoint& p : pts) {
      max_dist = std::max(max_dist, DistanceToSupport(params, p.x, p.y));
      ++counts[p.quadrant - 1];
      if (p.x > 0) {
        sum_y += p.y;
        ++right;
      }
    }
    const double total = exact_mass[0] + exact_mass[1] + exact_mass[2] + exact_mass[3];
    std::cout << "samples " << pts.size() << ", max distance to support "
              << Fmt("%.3e", max_dist) << "\n";
    for (int q = 0; q < 4; ++q) {
      std::cout << "Q" << q + 1 << " frequency "
                << Fmt("%.6f", static_cast<double>(counts[q]) / static_cast<double>(pts.size()))
                << " (mass share " << Fmt("%.6f", exact_mass[q] / total) << ")\n";
    }
    if (right > 0) {
      std::cout << "E[y | x > 0] " << Fmt("%.6f", sum_y / static_cast<double>(right)) << "\n";
    }
  }
  if (!args.svg.empty()) {
    WriteFile(args.svg, SegmentsSvg(SupportSegments(params), "rotation support"));
  }
  return ok ? kOk : kFailed;
}

int RunMoments(const std::string& measure_file, const std::string& basis_text,
               std::size_t demo) {
  if (demo > 0) {
    const DescribabilityDemo d = NonDescribabilityDemo(demo);
    std::cout << "moments: " << d.basis.ToString() << " (d = " << d.n_moments << ")\n"
              << "cycle with " << d.measure.size() << " atoms in the example game with n = "
              << d.r << "\n"
              << "extremality witness dimension " << d.witness_dimension << "\n"
              << "mu1 " << ToJson(d.split.mu1).dump() << "\n"
              << "mu2 " << ToJson(d.split.mu2).dump() << "\n"
              << (d.verified ? "split VERIFIED" : "split FAILED") << "\n";
    return d.verified ? kOk : kFailed;
  }
  if (measure_file.empty()) throw InputError("moments needs --measure or --demo");
  const FiniteMeasure mu = MeasureFromJson(ReadJsonFile(measure_file));
  const MomentBasis basis = MomentBasis::Parse(basis_text);
  Json moments = Json::array();
  for (const Rational& m : MomentsOf(mu, basis)) moments.push_back(ToJson(m));
  std::cout << "moments " << moments.dump() << "\n";
  const MomentSplit s = CaratheodorySplit(mu, basis);
  if (s.extreme_for_basis) {
    std::cout << "extreme for this basis\n";
    return kOk;
  }
  std::cout << "mu1 " << ToJson(s.mu1).dump() << "\n"
            << "mu2 " << ToJson(s.mu2).dump() << "\n";
  if (s.degenerate) std::cout << "degenerate split: every moment of mu is zero\n";
  const auto target = MomentsOf(mu, basis);
  const bool ok = s.mu1 + s.mu2 == mu.Scaled(Rational(2)) &&
                  MomentsOf(s.mu1, basis) == target && MomentsOf(s.mu2, basis) == target;
  std::cout << (ok ? "split VERIFIED" : "split FAILED") << "\n";
  return ok ? kOk : kFailed;
}

int RunReportCommand(bool big, const std::string& out_file) {
  const auto rows = RunReport(big);
  const std::string table = FormatReport(rows);
  std::cout << table;
  if (!out_file.empty()) WriteFile(out_file, table);
  for (const ReportRow& r : rows) {
    if (!r.pass) return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equilibrium geometry of scaled matching-pennies games"};
  app.require_subcommand(1);

  GameSource nash_src, cycles_src, vertices_src, check_src;

  auto* nash = app.add_subcommand("nash", "enumerate extreme Nash equilibria");
  nash_src.Attach(nash);

  std::string cycles_out, cycles_svg;
  auto* cycles = app.add_subcommand("cycles", "enumerate extreme correlated equilibria");
  cycles_src.Attach(cycles);
  cycles->add_option("--out", cycles_out, "write patterns and measures as JSON");
  cycles->add_option("--emit-svg", cycles_svg, "directory for support plots");

  bool compare = false, dump = false;
  auto* vertices = app.add_subcommand("vertices", "vertices of the correlated-equilibrium polytope");
  vertices_src.Attach(vertices);
  vertices->add_flag("--compare-cycles", compare, "compare with the cycle enumeration");
  vertices->add_flag("--dump", dump, "print every vertex as a measure");

  std::string measure_file, method = "def";
  auto* check = app.add_subcommand("check", "test a measure for correlated equilibrium");
  check_src.Attach(check);
  check->add_option("--measure", measure_file, "measure JSON [[x, y, w], ...]")->required();
  check->add_option("--method", method, "def: deviation sums; proj: projections")
      ->check(CLI::IsMember({"def", "proj"}));

  ErgodicArgs eargs;
  auto* ergodic = app.add_subcommand("ergodic", "rotation equilibrium with infinite support");
  ergodic->add_option("--a", eargs.a, "left endpoint")->capture_default_str();
  ergodic->add_option("--b", eargs.b, "right endpoint")->capture_default_str();
  ergodic->add_option("--alpha-num", eargs.alpha_num, "C in alpha = C / sqrt(5)")
      ->capture_default_str();
  ergodic->add_option("--alpha-form", eargs.alpha_form, "sqrt5 | rational P/Q")
      ->expected(1, 2);
  ergodic->add_option("--samples", eargs.samples, "number of draws");
  ergodic->add_option("--seed", eargs.seed, "sampler seed")->capture_default_str();
  ergodic->add_option("--bins", eargs.bins, "bins per axis")->capture_default_str();
  ergodic->add_option("--quad-points", eargs.quad_points, "midpoint nodes per piece")
      ->capture_default_str();
  ergodic->add_option("--orbit", eargs.orbit, "orbit length")->capture_default_str();
  ergodic->add_option("--orbit-bins", eargs.orbit_bins, "orbit histogram bins")
      ->capture_default_str();
  ergodic->add_option("--tolerance", eargs.tolerance, "residual tolerance")
      ->capture_default_str();
  ergodic->add_flag("--clockwise", eargs.clockwise, "mirror the support through the diagonal");
  ergodic->add_option("--emit-svg", eargs.svg, "write the support plot");

  std::string moments_measure, basis = "1,x,y";
  std::size_t demo = 0;
  auto* moments = app.add_subcommand("moments", "moment-preserving splits");
  moments->add_option("--measure", moments_measure, "measure JSON");
  moments->add_option("--basis", basis, "monomials, e.g. \"1,x,y,xy\"")->capture_default_str();
  moments->add_option("--demo", demo, "split an extreme cycle against D moments");

  bool big = false;
  std::string report_out;
  auto* report = app.add_subcommand("report", "full cross-validation summary");
  report->add_flag("--big", big, "include the n = 3 polytope cross-check");
  report->add_option("--out", report_out, "also write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*nash) return RunNash(nash_src);
    if (*cycles) return RunCycles(cycles_src, cycles_out, cycles_svg);
    if (*vertices) return RunVertices(vertices_src, compare, dump);
    if (*check) return RunCheck(check_src, measure_file, method);
    if (*ergodic) return RunErgodic(eargs);
    if (*moments) return RunMoments(moments_measure, basis, demo);
    if (*report) return RunReportCommand(big, report_out);
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "; use --method def\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}
