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

#include "ceptool/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ceptool::kernels {

double MidpointScalar(const ReciprocalAffine& f, double t0, double h,
                      std::size_t m) {
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = t0 + (static_cast<double>(j) + 0.5) * h;
    sum += f.scale / ((f.p1 * t + f.q1) * (f.p2 * t + f.q2));
  }
  return sum * h;
}

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool Avx2Available() {
#if defined(CEPTOOL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool available = __builtin_cpu_supports("avx2");
  return available;
#else
  return false;
#endif
}

namespace {

// -1: automatic, otherwise an Isa value.
std::atomic<int> forced{-1};

Isa AutomaticIsa() {
  if (const char* env = std::getenv("CEPTOOL_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  }
  return Avx2Available() ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

Isa ActiveIsa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f < 0) return AutomaticIsa();
  const Isa isa = static_cast<Isa>(f);
  if (isa == Isa::kAvx2 && !Avx2Available()) return Isa::kScalar;
  return isa;
}

void ForceIsa(std::optional<Isa> isa) {
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

double Midpoint(const ReciprocalAffine& f, double t0, double h, std::size_t m) {
#if defined(CEPTOOL_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return MidpointAvx2(f, t0, h, m);
#endif
  return MidpointScalar(f, t0, h, m);
}

}  // namespace ceptool::kernels
