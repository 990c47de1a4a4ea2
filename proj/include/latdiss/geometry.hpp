#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "latdiss/words.hpp"

namespace latdiss {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Parity class of a lattice point.
//   A = (even, even)   B = (odd, even)   C = (odd, odd)   D = (even, odd)
enum class Color : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline constexpr Color kAllColors[] = {Color::A, Color::B, Color::C, Color::D};

char to_char(Color c);
Color color_of(LatticePoint p);

inline bool same_color(LatticePoint p, LatticePoint q) { return color_of(p) == color_of(q); }

struct LatticeTriangle {
  LatticePoint v0, v1, v2;

  friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
};

// Twice the signed area of (p, q, r): positive iff counterclockwise, zero iff
// collinear. Throws ErrorCode::Overflow instead of wrapping.
std::int64_t signed_area2(LatticePoint p, LatticePoint q, LatticePoint r);
std::int64_t signed_area2(const LatticeTriangle& t);

bool is_integer_area(const LatticeTriangle& t);
bool has_repeated_color(const LatticeTriangle& t);
bool is_tricolor(const LatticeTriangle& t);
bool collinear(LatticePoint p, LatticePoint q, LatticePoint r);

// Same triangle with v1/v2 swapped if needed so that signed_area2 >= 0.
LatticeTriangle counterclockwise(const LatticeTriangle& t);

// Strict weak order of nonzero direction vectors by polar angle in [0, 2*pi).
bool angle_less(LatticePoint u, LatticePoint v);

// A strictly convex polygon with counterclockwise vertex order. Instances are
// only produced by validate_convex.
class ConvexLatticePolygon {
 public:
  std::span<const LatticePoint> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticePoint& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }

  // True if p lies inside or on the boundary.
  bool contains(LatticePoint p) const;

  friend bool operator==(const ConvexLatticePolygon&, const ConvexLatticePolygon&) = default;

 private:
  friend ConvexLatticePolygon validate_convex(std::vector<LatticePoint> vertices);
  explicit ConvexLatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

  std::vector<LatticePoint> vertices_;
};

// Errors: TooFewVertices, RepeatedVertex, NotStrictlyConvex. Clockwise input
// is reversed. Reflex corners and self-overlapping (star) vertex orders are
// rejected as NotStrictlyConvex.
ConvexLatticePolygon validate_convex(std::vector<LatticePoint> vertices);

std::int64_t polygon_area2(const ConvexLatticePolygon& polygon);

// Corner colors read counterclockwise.
CyclicWord boundary_word(const ConvexLatticePolygon& polygon);

}  // namespace latdiss
