#include "latdiss/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "latdiss/checked.hpp"

namespace latdiss {

char to_char(Color c) { return static_cast<char>('A' + static_cast<int>(c)); }

Color color_of(LatticePoint p) {
  const bool x_odd = (p.x & 1) != 0;
  const bool y_odd = (p.y & 1) != 0;
  if (!x_odd) return y_odd ? Color::D : Color::A;
  return y_odd ? Color::C : Color::B;
}

std::int64_t signed_area2(LatticePoint p, LatticePoint q, LatticePoint r) {
  using namespace checked;
  // Expansion of det [[1,1,1],[x0,x1,x2],[y0,y1,y2]] after subtracting the first column.
  return sub(mul(sub(q.x, p.x), sub(r.y, p.y)), mul(sub(q.y, p.y), sub(r.x, p.x)));
}

std::int64_t signed_area2(const LatticeTriangle& t) { return signed_area2(t.v0, t.v1, t.v2); }

bool is_integer_area(const LatticeTriangle& t) { return signed_area2(t) % 2 == 0; }

bool has_repeated_color(const LatticeTriangle& t) {
  const Color a = color_of(t.v0), b = color_of(t.v1), c = color_of(t.v2);
  return a == b || b == c || a == c;
}

bool is_tricolor(const LatticeTriangle& t) { return !has_repeated_color(t); }

bool collinear(LatticePoint p, LatticePoint q, LatticePoint r) { return signed_area2(p, q, r) == 0; }

LatticeTriangle counterclockwise(const LatticeTriangle& t) {
  if (signed_area2(t) < 0) return {t.v0, t.v2, t.v1};
  return t;
}

namespace {

int half(LatticePoint v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace

bool angle_less(LatticePoint u, LatticePoint v) {
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return signed_area2({0, 0}, u, v) > 0;
}

bool ConvexLatticePolygon::contains(LatticePoint p) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (signed_area2(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

ConvexLatticePolygon validate_convex(std::vector<LatticePoint> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  std::set<LatticePoint> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::RepeatedVertex,
                  "vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) + ") appears twice");
    }
  }

  int positive = 0, negative = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = signed_area2(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
    if (a == 0) {
      const auto& v = vertices[(i + 1) % n];
      throw Error(ErrorCode::NotStrictlyConvex,
                  "collinear consecutive vertices around (" + std::to_string(v.x) + "," +
                      std::to_string(v.y) + ")");
    }
    (a > 0 ? positive : negative)++;
  }
  if (positive != 0 && negative != 0) {
    throw Error(ErrorCode::NotStrictlyConvex,
                "polygon has a reflex corner; non-convex polygons are not supported "
                "(their integral dissections may need signed areas)");
  }
  if (negative != 0) std::reverse(vertices.begin(), vertices.end());

  // All turns are left turns; the boundary must also wind exactly once.
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    const LatticePoint e1{checked::sub(b.x, a.x), checked::sub(b.y, a.y)};
    const LatticePoint e2{checked::sub(c.x, b.x), checked::sub(c.y, b.y)};
    if (angle_less(e2, e1)) ++wraps;
  }
  if (wraps != 1) {
    throw Error(ErrorCode::NotStrictlyConvex, "vertex order winds " + std::to_string(wraps) +
                                                  " times; polygon is self-intersecting");
  }
  return ConvexLatticePolygon(std::move(vertices));
}

std::int64_t polygon_area2(const ConvexLatticePolygon& polygon) {
  const auto v = polygon.vertices();
  std::int64_t total = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    total = checked::add(total, signed_area2(v[0], v[i], v[i + 1]));
  }
  return total;
}

CyclicWord boundary_word(const ConvexLatticePolygon& polygon) {
  std::string letters;
  letters.reserve(polygon.size());
  for (const auto& v : polygon.vertices()) letters.push_back(to_char(color_of(v)));
  return CyclicWord(std::move(letters));
}

}  // namespace latdiss
