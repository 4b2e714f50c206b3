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

#include "ceptool/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>

#include "ceptool/cycles.hpp"
#include "ceptool/nash.hpp"

namespace ceptool {

RationalVector MeasureToCoordinates(const FiniteGame& game,
                                    const FiniteMeasure& mu) {
  const std::size_t ny = game.cy().size();
  RationalVector z(game.cx().size() * ny);
  for (const auto& [p, w] : mu.atoms()) {
    auto ix = std::lower_bound(game.cx().begin(), game.cx().end(), p.x);
    auto iy = std::lower_bound(game.cy().begin(), game.cy().end(), p.y);
    if (ix == game.cx().end() || *ix != p.x || iy == game.cy().end() ||
        *iy != p.y) {
      throw InputError("atom (" + p.x.ToString() + ", " + p.y.ToString() +
                       ") lies outside the strategy grid");
    }
    z[static_cast<std::size_t>(ix - game.cx().begin()) * ny +
      static_cast<std::size_t>(iy - game.cy().begin())] = w;
  }
  return z;
}

FiniteMeasure CoordinatesToMeasure(const FiniteGame& game,
                                   const RationalVector& z) {
  const std::size_t ny = game.cy().size();
  if (z.size() != game.cx().size() * ny) {
    throw InputError("coordinate vector does not match the game size");
  }
  FiniteMeasure mu;
  for (std::size_t i = 0; i < game.cx().size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      mu.Add({game.cx()[i], game.cy()[j]}, z[i * ny + j]);
    }
  }
  return mu;
}

HPolytope CeHRep(const FiniteGame& game) {
  const auto& cx = game.cx();
  const auto& cy = game.cy();
  const std::size_t nx = cx.size(), ny = cy.size();
  HPolytope p;
  p.dim = nx * ny;

  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t a = 0; a < nx; ++a) {
      if (a == i) continue;
      LinearRow row{RationalVector(p.dim), Rational(0)};
      for (std::size_t j = 0; j < ny; ++j) {
        row.coeffs[i * ny + j] = cx[i] * cy[j] - cx[a] * cy[j];
      }
      p.inequalities.push_back(std::move(row));
    }
  }
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t b = 0; b < ny; ++b) {
      if (b == j) continue;
      LinearRow row{RationalVector(p.dim), Rational(0)};
      for (std::size_t i = 0; i < nx; ++i) {
        row.coeffs[i * ny + j] = cx[i] * cy[b] - cx[i] * cy[j];
      }
      p.inequalities.push_back(std::move(row));
    }
  }
  for (std::size_t k = 0; k < p.dim; ++k) {
    LinearRow row{RationalVector(p.dim), Rational(0)};
    row.coeffs[k] = Rational(1);
    p.inequalities.push_back(std::move(row));
  }
  p.equalities.push_back({RationalVector(p.dim, Rational(1)), Rational(1)});
  return p;
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntegerVector coords;
  Bits zeros;
};

bool IsNonnegativityRow(const LinearRow& row, std::size_t& coord) {
  if (!row.rhs.is_zero()) return false;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
    if (row.coeffs[i].is_zero()) continue;
    if (row.coeffs[i].sign() < 0 || ++nonzero > 1) return false;
    coord = i;
  }
  return nonzero == 1;
}

BigInt IntegerDot(const IntegerVector& a, const IntegerVector& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

// Homogenized row (coeffs, -rhs) scaled to a primitive integer vector.
IntegerVector HomogenizedRow(const LinearRow& row) {
  RationalVector h(row.coeffs);
  h.push_back(-row.rhs);
  IntegerVector out = ClearDenominators({h}).front();
  MakePrimitive(out);
  return out;
}

struct ConeRow {
  IntegerVector h;
  bool equality;
};

}  // namespace

VertexEnumeration EnumerateVertices(const HPolytope& p) {
  const std::size_t d = p.dim;
  const std::size_t ambient = d + 1;  // last coordinate is the homogenizer

  std::vector<bool> has_nonneg(d, false);
  std::vector<ConeRow> rows;
  for (const LinearRow& r : p.equalities) {
    if (r.coeffs.size() != d) throw InputError("row length does not match dim");
    rows.push_back({HomogenizedRow(r), true});
  }
  for (const LinearRow& r : p.inequalities) {
    if (r.coeffs.size() != d) throw InputError("row length does not match dim");
    std::size_t coord = 0;
    if (IsNonnegativityRow(r, coord)) {
      has_nonneg[coord] = true;
      continue;  // already imposed by the starting orthant
    }
    rows.push_back({HomogenizedRow(r), false});
  }
  if (!std::all_of(has_nonneg.begin(), has_nonneg.end(), [](bool b) { return b; })) {
    throw InputError("vertex enumeration needs a nonnegativity row per coordinate");
  }

  // Zero-set bit i < ambient: coordinate i vanishes; ambient + k: row k tight.
  const std::size_t nbits = ambient + rows.size();
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < ambient; ++j) {
    Ray r{IntegerVector(ambient, BigInt(0)), Bits(nbits)};
    r.coords[j] = 1;
    for (std::size_t i = 0; i < ambient; ++i) {
      if (i != j) r.zeros.set(i);
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < rows.size() && !rays.empty(); ++k) {
    const ConeRow& row = rows[k];
    const std::size_t bit = ambient + k;
    std::vector<BigInt> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = IntegerDot(row.h, rays[i].coords);
      const int s = sgn(value[i]);
      if (s > 0) {
        pos.push_back(i);
        if (!row.equality) next.push_back(rays[i]);
      } else if (s < 0) {
        neg.push_back(i);
      } else {
        next.push_back(rays[i]);
        next.back().zeros.set(bit);
      }
    }
    for (std::size_t a : pos) {
      for (std::size_t b : neg) {
        Bits common = rays[a].zeros & rays[b].zeros;
        if (common.count() + 2 < ambient) continue;
        bool adjacent = true;
        for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
          if (c != a && c != b && common.subset_of(rays[c].zeros)) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        Ray r{IntegerVector(ambient), common};
        const BigInt neg_b = -value[b];
        for (std::size_t i = 0; i < ambient; ++i) {
          r.coords[i] = value[a] * rays[b].coords[i] + neg_b * rays[a].coords[i];
        }
        MakePrimitive(r.coords);
        r.zeros.set(bit);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  VertexEnumeration out;
  std::set<RationalVector> vertices;
  for (const Ray& r : rays) {
    const BigInt& t = r.coords[d];
    if (t == 0) continue;
    RationalVector v;
    v.reserve(d);
    for (std::size_t i = 0; i < d; ++i) v.emplace_back(r.coords[i], t);
    vertices.insert(std::move(v));
  }
  if (vertices.empty()) return out;
  for (const Ray& r : rays) {
    if (r.coords[d] == 0) throw InputError("polytope is unbounded");
  }
  out.feasible = true;
  out.vertex_set.vertices.assign(vertices.begin(), vertices.end());
  return out;
}

std::string VerifyVertexSet(const HPolytope& p, const VertexSet& vs,
                            bool check_adjacency) {
  const std::size_t m = p.inequalities.size();
  std::vector<Bits> tight;
  tight.reserve(vs.vertices.size());

  auto tight_rank = [&](const Bits& rows) {
    RationalMatrix mat;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows.test(i)) mat.push_back(p.inequalities[i].coeffs);
    }
    for (const LinearRow& e : p.equalities) mat.push_back(e.coeffs);
    return Rank(mat, p.dim);
  };

  for (std::size_t v = 0; v < vs.vertices.size(); ++v) {
    const RationalVector& z = vs.vertices[v];
    if (z.size() != p.dim) return "vertex " + std::to_string(v) + " has wrong length";
    Bits t(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational lhs = Dot(p.inequalities[i].coeffs, z);
      if (lhs < p.inequalities[i].rhs) {
        return "vertex " + std::to_string(v) + " violates inequality " +
               std::to_string(i);
      }
      if (lhs == p.inequalities[i].rhs) t.set(i);
    }
    for (std::size_t e = 0; e < p.equalities.size(); ++e) {
      if (Dot(p.equalities[e].coeffs, z) != p.equalities[e].rhs) {
        return "vertex " + std::to_string(v) + " violates equality " +
               std::to_string(e);
      }
    }
    if (tight_rank(t) != p.dim) {
      return "vertex " + std::to_string(v) + " is not a basic point";
    }
    tight.push_back(std::move(t));
  }
  if (!check_adjacency) return {};

  for (std::size_t a = 0; a < tight.size(); ++a) {
    for (std::size_t b = a + 1; b < tight.size(); ++b) {
      const Bits common = tight[a] & tight[b];
      bool combinatorial = true;
      for (std::size_t c = 0; c < tight.size() && combinatorial; ++c) {
        if (c != a && c != b && common.subset_of(tight[c])) combinatorial = false;
      }
      const bool algebraic = tight_rank(common) + 1 == p.dim;
      if (combinatorial != algebraic) {
        return "adjacency tests disagree on vertices " + std::to_string(a) +
               " and " + std::to_string(b);
      }
    }
  }
  return {};
}

VertexClassification ClassifyVertices(const FiniteGame& game,
                                      const VertexSet& vs) {
  std::set<FiniteMeasure> products;
  for (const NashPair& np : EnumerateExtremeNash(game)) {
    products.insert(ProductMeasure(np.sigma, np.tau));
  }
  VertexClassification out;
  for (std::size_t i = 0; i < vs.vertices.size(); ++i) {
    const FiniteMeasure mu = CoordinatesToMeasure(game, vs.vertices[i]);
    if (products.count(mu.Normalized())) {
      out.product.push_back(i);
    } else if (PatternOfMeasure(mu)) {
      out.cycle.push_back(i);
    } else {
      out.other.push_back(i);
    }
  }
  return out;
}

}  // namespace ceptool
