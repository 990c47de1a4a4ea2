#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latdiss/geometry.hpp"

namespace latdiss {

struct Dissection {
  std::vector<LatticeTriangle> triangles;
};

// x -> M x + t with M an integer matrix of determinant +1 or -1.
class UnimodularAffineMap {
 public:
  // Throws NotUnimodular unless m00*m11 - m01*m10 is +1 or -1.
  UnimodularAffineMap(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11,
                      std::int64_t tx = 0, std::int64_t ty = 0);

  static UnimodularAffineMap identity() { return {1, 0, 0, 1}; }
  static UnimodularAffineMap translation(std::int64_t tx, std::int64_t ty) { return {1, 0, 0, 1, tx, ty}; }

  LatticePoint operator()(LatticePoint p) const;
  LatticeTriangle operator()(const LatticeTriangle& t) const;

  // (a * b)(p) == a(b(p))
  friend UnimodularAffineMap operator*(const UnimodularAffineMap& a, const UnimodularAffineMap& b);
  UnimodularAffineMap inverse() const;
  std::int64_t determinant() const;

  std::int64_t m00() const { return m00_; }
  std::int64_t m01() const { return m01_; }
  std::int64_t m10() const { return m10_; }
  std::int64_t m11() const { return m11_; }
  std::int64_t tx() const { return tx_; }
  std::int64_t ty() const { return ty_; }

  friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;

 private:
  std::int64_t m00_, m01_, m10_, m11_, tx_, ty_;
};

// Triangle (0,0), (d,0), (p,q) with d > 0, q >= 1 and 1 <= p <= q.
struct NormalizedTriangle {
  std::int64_t d = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;

  LatticeTriangle triangle() const { return {{0, 0}, {d, 0}, {p, q}}; }
  friend bool operator==(const NormalizedTriangle&, const NormalizedTriangle&) = default;
};

struct Normalization {
  UnimodularAffineMap map;
  NormalizedTriangle normal;
  // Input vertices relabeled so that map(source.v0) = (0,0),
  // map(source.v1) = (d,0) and map(source.v2) = (p,q).
  LatticeTriangle source;
};

// Maps an integer-area triangle to standard position with its first two
// vertices of equal color, so d is even. Throws Degenerate or NotIntegerArea.
Normalization normalize(const LatticeTriangle& t);

// Splits t at a lattice point x in the closed triangle: three pieces if x is
// interior, two if it is on an edge. Pieces are counterclockwise with positive
// area. Throws Degenerate, OutsideTriangle or IsVertex.
std::vector<LatticeTriangle> split_with_point(const LatticeTriangle& t, LatticePoint x);

// Dissects an integer-area triangle into area2/2 triangles of doubled area 2.
// Throws Degenerate or NotIntegerArea.
Dissection refine_triangle(const LatticeTriangle& t);

// Good diagonal dissection realized on the polygon's corners, or nullopt when
// the boundary word is not contractible.
std::optional<Dissection> diagonal_dissection(const ConvexLatticePolygon& polygon);

// Dissection into triangles of doubled area 2, or nullopt when none exists.
// Throws OddArea if the word is contractible but the area is not an integer.
std::optional<Dissection> unit_dissection(const ConvexLatticePolygon& polygon);

}  // namespace latdiss
