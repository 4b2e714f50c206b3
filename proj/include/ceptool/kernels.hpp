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

#ifndef CEPTOOL_KERNELS_HPP_
#define CEPTOOL_KERNELS_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace ceptool::kernels {

// f(t) = scale / ((p1 t + q1) (p2 t + q2)). Every density the ergodic
// quadrature integrates along a support segment has this form.
struct ReciprocalAffine {
  double scale = 1.0;
  double p1 = 1.0, q1 = 0.0;
  double p2 = 0.0, q2 = 1.0;

  double operator()(double t) const {
    return scale / ((p1 * t + q1) * (p2 * t + q2));
  }
};

// Composite midpoint rule: h * sum_{j<m} f(t0 + (j + 1/2) h).
double MidpointScalar(const ReciprocalAffine& f, double t0, double h,
                      std::size_t m);

#if defined(CEPTOOL_HAVE_AVX2)
// Same sum, four lanes at a time. Lane partial sums are combined pairwise,
// so the result can differ from the scalar kernel in the last few ulps.
double MidpointAvx2(const ReciprocalAffine& f, double t0, double h,
                    std::size_t m);
#endif

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// True when the AVX2 kernel is compiled in and the CPU supports it.
bool Avx2Available();

// Kernel used by Midpoint(): AVX2 when available, unless the environment
// variable CEPTOOL_SIMD=scalar or ForceIsa() selects the scalar path.
Isa ActiveIsa();

// Overrides the runtime choice; nullopt restores automatic selection.
// Forcing kAvx2 on a machine without it falls back to scalar.
void ForceIsa(std::optional<Isa> isa);

double Midpoint(const ReciprocalAffine& f, double t0, double h, std::size_t m);

}  // namespace ceptool::kernels

#endif  // CEPTOOL_KERNELS_HPP_
