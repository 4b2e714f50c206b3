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

#ifndef CEPTOOL_REPORT_HPP_
#define CEPTOOL_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ceptool/measures.hpp"
#include "ceptool/polytope.hpp"

namespace ceptool {

struct CycleComparison {
  std::size_t vertex_count = 0;
  std::size_t cycle_count = 0;
  // Vertex set equals the set of normalized cycle measures.
  bool equal = false;
  // Empty when every vertex passed VerifyVertexSet.
  std::string verify_error;
  VertexClassification classes;
  VertexSet vertices;
};

// Enumerates the vertices of the proper-CE polytope and compares them, as
// exact coordinate vectors, with the normalized cycle measures.
CycleComparison CompareVerticesWithCycles(const FiniteGame& game,
                                          bool check_adjacency);

struct ReportRow {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Cross-validation suite: Nash and CE counts, polytope-vs-cycle equality for
// n = 1, 2 (and 3 with `big`), f(n) bounds, extremality witnesses, ergodic
// residuals and equidistribution, rational shadows, moment splitting.
std::vector<ReportRow> RunReport(bool big);

// Fixed-width table, one row per check, followed by a summary line.
std::string FormatReport(const std::vector<ReportRow>& rows);

}  // namespace ceptool

#endif  // CEPTOOL_REPORT_HPP_
