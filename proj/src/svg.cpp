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

#include "ceptool/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ceptool/cycles.hpp"

namespace ceptool {

namespace {

std::string Num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Header(std::string_view title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n"
         "<title>" + Escape(title) + "</title>\n"
         "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\"/>\n"
         "<g transform=\"translate(256,256) scale(240,-240)\">\n"
         "<rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"none\" "
         "stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n"
         "<line class=\"axis\" x1=\"-1\" y1=\"0\" x2=\"1\" y2=\"0\" stroke=\"gray\" "
         "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n"
         "<line class=\"axis\" x1=\"0\" y1=\"-1\" x2=\"0\" y2=\"1\" stroke=\"gray\" "
         "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
}

const char* kFooter = "</g>\n</svg>\n";

}  // namespace

std::string SupportSvg(const FiniteMeasure& mu, std::string_view title) {
  std::string s = Header(title);
  Rational max_w(0);
  for (const auto& [p, w] : mu.atoms()) max_w = std::max(max_w, w);
  for (const auto& [p, w] : mu.atoms()) {
    // Largest dot has radius 0.05; area scales with weight.
    const double r = 0.05 * std::sqrt((w / max_w).to_double());
    s += "<circle class=\"atom\" cx=\"" + Num(p.x.to_double()) + "\" cy=\"" +
         Num(p.y.to_double()) + "\" r=\"" + Num(r) + "\" data-x=\"" +
         p.x.ToString() + "\" data-y=\"" + p.y.ToString() + "\" data-w=\"" +
         w.ToString() + "\" fill=\"black\"/>\n";
  }
  return s + kFooter;
}

std::string SegmentsSvg(const std::array<Segment, 5>& segments,
                        std::string_view title) {
  std::string s = Header(title);
  for (const Segment& g : segments) {
    if (g.x0 == g.x1 && g.y0 == g.y1) continue;
    s += "<line class=\"support\" x1=\"" + Num(g.x0) + "\" y1=\"" + Num(g.y0) +
         "\" x2=\"" + Num(g.x1) + "\" y2=\"" + Num(g.y1) +
         "\" stroke=\"black\" stroke-width=\"2\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";
  }
  return s + kFooter;
}

FiniteMeasure StaircaseK2Measure() {
  return CycleMeasure(CyclePattern::FromOddValues(
      {Rational(2, 5), Rational(-3, 5)}, {Rational(1, 5), Rational(-4, 5)}));
}

FiniteMeasure StaircaseK4Measure() {
  return CycleMeasure(CyclePattern::FromOddValues(
      {Rational(2, 5), Rational(-2, 5), Rational(3, 5), Rational(-3, 5)},
      {Rational(3, 5), Rational(-2, 5), Rational(2, 5), Rational(-3, 5)}));
}

std::string StaircaseK2Svg() {
  return SupportSvg(StaircaseK2Measure(), "extreme correlated equilibrium, k = 2");
}

std::string StaircaseK4Svg() {
  return SupportSvg(StaircaseK4Measure(), "extreme correlated equilibrium, k = 4");
}

std::string RotationSupportSvg() {
  return SegmentsSvg(SupportSegments(RotationParams::Sqrt5(0.2, 0.8, 1.0)),
                     "rotation support, a = 0.2, b = 0.8, alpha = 1/sqrt(5)");
}

}  // namespace ceptool
