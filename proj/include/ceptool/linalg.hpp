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

#ifndef CEPTOOL_LINALG_HPP_
#define CEPTOOL_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "ceptool/rational.hpp"

namespace ceptool {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerVector = std::vector<BigInt>;
using IntegerMatrix = std::vector<IntegerVector>;

// Row echelon form computed by fraction-free (Bareiss) elimination. Every
// intermediate entry is a minor of the input, so all divisions are exact.
struct EchelonForm {
  IntegerMatrix rows;              // first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

// Multiplies each row by the lcm of its denominators.
IntegerMatrix ClearDenominators(const RationalMatrix& m);

// Divides out the gcd of the entries; the zero vector is returned unchanged.
void MakePrimitive(IntegerVector& v);

EchelonForm FractionFreeEchelon(IntegerMatrix m, std::size_t cols);

std::size_t Rank(const RationalMatrix& m, std::size_t cols);

// Basis of {v : m v = 0}, one primitive integer vector per free column.
std::vector<RationalVector> NullSpace(const RationalMatrix& m,
                                      std::size_t cols);

Rational Dot(const RationalVector& a, const RationalVector& b);

}  // namespace ceptool

#endif  // CEPTOOL_LINALG_HPP_
