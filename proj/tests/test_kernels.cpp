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

#include <cmath>
#include <cstdlib>
#include <random>

#include "doctest.h"

#include "ceptool/kernels.hpp"

using namespace ceptool::kernels;

TEST_CASE("scalar midpoint rule against closed forms") {
  // int_1^2 dt / t = ln 2; midpoint error is below h^2 / 24 * max|f''| = h^2 / 12.
  const ReciprocalAffine inv{1.0, 1.0, 0.0, 0.0, 1.0};
  const std::size_t m = 1000;
  const double h = 1.0 / static_cast<double>(m);
  CHECK(std::abs(MidpointScalar(inv, 1.0, h, m) - std::log(2.0)) <= h * h / 12.0);
  // int_1^3 dt / (t (t + 1)) = ln(3/4) - ln(1/2) = ln(3/2).
  const ReciprocalAffine f{1.0, 1.0, 0.0, 1.0, 1.0};
  CHECK(std::abs(MidpointScalar(f, 1.0, 2.0 / 4000, 4000) - std::log(1.5)) < 1e-7);
  CHECK(MidpointScalar(f, 1.0, 0.1, 0) == 0.0);
}

TEST_CASE("dispatch honours the override and the environment") {
  ForceIsa(Isa::kScalar);
  CHECK(ActiveIsa() == Isa::kScalar);
  ForceIsa(std::nullopt);
  setenv("CEPTOOL_SIMD", "scalar", 1);
  CHECK(ActiveIsa() == Isa::kScalar);
  unsetenv("CEPTOOL_SIMD");
  CHECK(ActiveIsa() == (Avx2Available() ? Isa::kAvx2 : Isa::kScalar));
  CHECK(IsaName(Isa::kAvx2) == "avx2");
}

#if defined(CEPTOOL_HAVE_AVX2)
TEST_CASE("AVX2 kernel matches the scalar reference") {
  if (!Avx2Available()) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(0.2, 1.0), off(-0.1, 0.1), sign(-1.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const ReciprocalAffine f{sign(rng) < 0 ? -1.0 : 1.0, coef(rng), off(rng) + 0.3,
                             trial % 3 == 0 ? 0.0 : coef(rng), off(rng) + 0.3};
    const std::size_t m = static_cast<std::size_t>(trial % 37) + (trial % 5 == 0 ? 10000 : 0);
    const double t0 = coef(rng), h = 0.6 / static_cast<double>(m + 1);
    const double s = MidpointScalar(f, t0, h, m);
    const double v = MidpointAvx2(f, t0, h, m);
    // Same terms, different summation order.
    CHECK(std::abs(s - v) <= 1e-13 * std::max(1.0, std::abs(s)));
  }
  // Fewer than one full block runs only the scalar tail and is bit-identical.
  const ReciprocalAffine inv{1.0, 1.0, 0.0, 0.0, 1.0};
  for (std::size_t m = 0; m < 4; ++m) {
    CHECK(MidpointAvx2(inv, 0.5, 0.1, m) == MidpointScalar(inv, 0.5, 0.1, m));
  }
}
#endif
