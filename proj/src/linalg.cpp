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

#include "ceptool/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ceptool {

IntegerMatrix ClearDenominators(const RationalMatrix& m) {
  IntegerMatrix out;
  out.reserve(m.size());
  for (const RationalVector& row : m) {
    const BigInt scale = DenominatorLcm(row);
    IntegerVector r;
    r.reserve(row.size());
    for (const Rational& v : row) {
      r.push_back(v.numerator() * (scale / v.denominator()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

void MakePrimitive(IntegerVector& v) {
  BigInt g = 0;
  for (const BigInt& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (BigInt& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

EchelonForm FractionFreeEchelon(IntegerMatrix m, std::size_t cols) {
  for (const IntegerVector& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  EchelonForm out;
  out.cols = cols;
  const std::size_t nrows = m.size();
  BigInt prev = 1;
  std::size_t r = 0;
  BigInt tmp;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev
        mpz_mul(m[i][j].get_mpz_t(), m[r][c].get_mpz_t(), m[i][j].get_mpz_t());
        mpz_mul(tmp.get_mpz_t(), m[i][c].get_mpz_t(), m[r][j].get_mpz_t());
        mpz_sub(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t Rank(const RationalMatrix& m, std::size_t cols) {
  return FractionFreeEchelon(ClearDenominators(m), cols).rank();
}

std::vector<RationalVector> NullSpace(const RationalMatrix& m,
                                      std::size_t cols) {
  const EchelonForm e = FractionFreeEchelon(ClearDenominators(m), cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = Rational(1);
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      Rational acc;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (!x[j].is_zero() && e.rows[k][j] != 0) {
          acc += Rational(e.rows[k][j]) * x[j];
        }
      }
      x[p] = -acc / Rational(e.rows[k][p]);
    }
    // Rescale to a primitive integer vector.
    IntegerVector iv = ClearDenominators({x}).front();
    MakePrimitive(iv);
    RationalVector out;
    out.reserve(cols);
    for (const BigInt& v : iv) out.emplace_back(v);
    basis.push_back(std::move(out));
  }
  return basis;
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Dot: size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace ceptool
