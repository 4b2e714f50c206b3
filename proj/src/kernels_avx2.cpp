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

// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "ceptool/kernels.hpp"

namespace ceptool::kernels {

double MidpointAvx2(const ReciprocalAffine& f, double t0, double h,
                    std::size_t m) {
  const std::size_t blocks = m / 4;
  const __m256d scale = _mm256_set1_pd(f.scale);
  const __m256d p1 = _mm256_set1_pd(f.p1), q1 = _mm256_set1_pd(f.q1);
  const __m256d p2 = _mm256_set1_pd(f.p2), q2 = _mm256_set1_pd(f.q2);
  const __m256d vh = _mm256_set1_pd(h);
  const __m256d vt0 = _mm256_set1_pd(t0);
  // Node index j + 1/2 per lane; t is recomputed from the index each block
  // rather than accumulated, matching the scalar node positions exactly.
  __m256d idx = _mm256_setr_pd(0.5, 1.5, 2.5, 3.5);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t b = 0; b < blocks; ++b) {
    const __m256d t = _mm256_add_pd(vt0, _mm256_mul_pd(idx, vh));
    const __m256d d1 = _mm256_add_pd(_mm256_mul_pd(p1, t), q1);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(p2, t), q2);
    acc = _mm256_add_pd(acc, _mm256_div_pd(scale, _mm256_mul_pd(d1, d2)));
    idx = _mm256_add_pd(idx, four);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t j = blocks * 4; j < m; ++j) {
    const double t = t0 + (static_cast<double>(j) + 0.5) * h;
    sum += f.scale / ((f.p1 * t + f.q1) * (f.p2 * t + f.q2));
  }
  return sum * h;
}

}  // namespace ceptool::kernels
