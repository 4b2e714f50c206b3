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

#ifndef CEPTOOL_PARALLEL_HPP_
#define CEPTOOL_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ceptool {

// Worker count: CEPTOOL_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int ThreadBudget();

// Runs body(i) for i in [0, count) on up to ThreadBudget() threads. Each
// index runs exactly once; callers write results into per-index slots so
// output does not depend on scheduling. The first exception is rethrown.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ceptool

#endif  // CEPTOOL_PARALLEL_HPP_
