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

#ifndef CEPTOOL_SVG_HPP_
#define CEPTOOL_SVG_HPP_

#include <array>
#include <string>
#include <string_view>

#include "ceptool/ergodic.hpp"
#include "ceptool/measures.hpp"

namespace ceptool {

// 512x512 plots of [-1, 1]^2. Geometry is written in data coordinates inside
// a single transformed group, numbers in shortest round-trip form, so the
// output is byte-identical for identical input and coordinates can be read
// back exactly.

// One dot per atom, dot area proportional to weight. Each circle also carries
// its exact coordinates and weight as data-x, data-y, data-w.
std::string SupportSvg(const FiniteMeasure& mu, std::string_view title);

std::string SegmentsSvg(const std::array<Segment, 5>& segments,
                        std::string_view title);

// The reference pictures: the k = 2 and k = 4 staircases on the values 0.2,
// 0.4, 0.6, 0.8, and the rotation support for a = 0.2, b = 0.8,
// alpha = 1/sqrt(5).
FiniteMeasure StaircaseK2Measure();
FiniteMeasure StaircaseK4Measure();
std::string StaircaseK2Svg();
std::string StaircaseK4Svg();
std::string RotationSupportSvg();

}  // namespace ceptool

#endif  // CEPTOOL_SVG_HPP_
