#include "latdiss/dissect.hpp"

#include <deque>
#include <string>
#include <tuple>

#include "latdiss/checked.hpp"
#include "latdiss/combi.hpp"

namespace latdiss {

using namespace checked;

UnimodularAffineMap::UnimodularAffineMap(std::int64_t m00, std::int64_t m01, std::int64_t m10,
                                         std::int64_t m11, std::int64_t tx, std::int64_t ty)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11), tx_(tx), ty_(ty) {
  const auto det = determinant();
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "matrix determinant is " + std::to_string(det));
  }
}

std::int64_t UnimodularAffineMap::determinant() const { return sub(mul(m00_, m11_), mul(m01_, m10_)); }

LatticePoint UnimodularAffineMap::operator()(LatticePoint p) const {
  return {add(add(mul(m00_, p.x), mul(m01_, p.y)), tx_), add(add(mul(m10_, p.x), mul(m11_, p.y)), ty_)};
}

LatticeTriangle UnimodularAffineMap::operator()(const LatticeTriangle& t) const {
  return {(*this)(t.v0), (*this)(t.v1), (*this)(t.v2)};
}

UnimodularAffineMap operator*(const UnimodularAffineMap& a, const UnimodularAffineMap& b) {
  const LatticePoint t = a(LatticePoint{b.tx_, b.ty_});
  return {add(mul(a.m00_, b.m00_), mul(a.m01_, b.m10_)), add(mul(a.m00_, b.m01_), mul(a.m01_, b.m11_)),
          add(mul(a.m10_, b.m00_), mul(a.m11_, b.m10_)), add(mul(a.m10_, b.m01_), mul(a.m11_, b.m11_)),
          t.x, t.y};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  const auto det = determinant();  // +-1, so it is its own inverse
  const std::int64_t i00 = mul(det, m11_), i01 = mul(det, neg(m01_));
  const std::int64_t i10 = mul(det, neg(m10_)), i11 = mul(det, m00_);
  const std::int64_t itx = neg(add(mul(i00, tx_), mul(i01, ty_)));
  const std::int64_t ity = neg(add(mul(i10, tx_), mul(i11, ty_)));
  return {i00, i01, i10, i11, itx, ity};
}

namespace {

// Returns (g, r, s) with r*a + s*b = g = gcd(a, b) > 0; (a, b) != (0, 0).
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, sub(old_r, mul(quotient, r)));
    std::tie(old_s, s) = std::make_tuple(s, sub(old_s, mul(quotient, s)));
    std::tie(old_t, t) = std::make_tuple(t, sub(old_t, mul(quotient, t)));
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_integer_area(std::int64_t area2) {
  if (area2 == 0) throw Error(ErrorCode::Degenerate, "triangle has zero area");
  if (area2 % 2 != 0) {
    throw Error(ErrorCode::NotIntegerArea, "doubled area " + std::to_string(area2) + " is odd");
  }
}

}  // namespace

Normalization normalize(const LatticeTriangle& t) {
  require_integer_area(signed_area2(t));

  const LatticePoint pts[3] = {t.v0, t.v1, t.v2};
  constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  LatticePoint a{}, b{}, c{};
  for (const auto& pair : kPairs) {
    if (same_color(pts[pair[0]], pts[pair[1]])) {
      a = pts[pair[0]];
      b = pts[pair[1]];
      c = pts[pair[2]];
      break;
    }
  }
  if (signed_area2(a, b, c) < 0) std::swap(a, b);

  const auto to_origin = UnimodularAffineMap::translation(neg(a.x), neg(a.y));
  const std::int64_t x1 = sub(b.x, a.x), y1 = sub(b.y, a.y);
  const auto [d, r, s] = extended_gcd(x1, y1);
  const UnimodularAffineMap rotate(r, s, neg(y1 / d), x1 / d);

  const LatticePoint apex = rotate(to_origin(c));
  const std::int64_t q = apex.y;
  const std::int64_t p = add(floor_mod(sub(apex.x, 1), q), 1);
  const std::int64_t k = sub(p, apex.x) / q;
  const UnimodularAffineMap shear(1, k, 0, 1);

  return {shear * rotate * to_origin, {d, p, q}, {a, b, c}};
}

std::vector<LatticeTriangle> split_with_point(const LatticeTriangle& t, LatticePoint x) {
  const LatticeTriangle ccw = counterclockwise(t);
  if (signed_area2(ccw) == 0) throw Error(ErrorCode::Degenerate, "cannot split a degenerate triangle");
  if (x == ccw.v0 || x == ccw.v1 || x == ccw.v2) {
    throw Error(ErrorCode::IsVertex, "split point is a vertex of the triangle");
  }
  const std::int64_t s0 = signed_area2(ccw.v0, ccw.v1, x);
  const std::int64_t s1 = signed_area2(ccw.v1, ccw.v2, x);
  const std::int64_t s2 = signed_area2(ccw.v2, ccw.v0, x);
  if (s0 < 0 || s1 < 0 || s2 < 0) {
    throw Error(ErrorCode::OutsideTriangle,
                "point (" + std::to_string(x.x) + "," + std::to_string(x.y) + ") is outside the triangle");
  }
  std::vector<LatticeTriangle> pieces;
  if (s0 > 0) pieces.push_back({ccw.v0, ccw.v1, x});
  if (s1 > 0) pieces.push_back({ccw.v1, ccw.v2, x});
  if (s2 > 0) pieces.push_back({ccw.v2, ccw.v0, x});
  return pieces;
}

Dissection refine_triangle(const LatticeTriangle& t) {
  const LatticeTriangle start = counterclockwise(t);
  require_integer_area(signed_area2(start));

  Dissection out;
  std::deque<LatticeTriangle> work{start};
  while (!work.empty()) {
    const LatticeTriangle current = work.front();
    work.pop_front();
    const std::int64_t area2 = signed_area2(current);
    if (area2 == 2) {
      out.triangles.push_back(current);
      continue;
    }
    const auto [map, normal, source] = normalize(current);
    LatticePoint split;
    if (normal.d > 2) {
      split = {2, 0};
    } else if (normal.q % 2 == 0) {
      split = {1, 0};
    } else if (normal.p % 2 != 0) {
      split = {1, 1};
    } else {
      split = {2, 1};
    }
    const auto back = map.inverse();
    for (const auto& piece : split_with_point(normal.triangle(), split)) {
      const LatticeTriangle mapped = counterclockwise(back(piece));
      const std::int64_t piece_area2 = signed_area2(mapped);
      if (piece_area2 <= 0 || piece_area2 >= area2 || piece_area2 % 2 != 0) {
        throw Error(ErrorCode::TheoremViolation,
                    "refinement produced a piece of doubled area " + std::to_string(piece_area2) +
                        " from one of doubled area " + std::to_string(area2));
      }
      work.push_back(mapped);
    }
  }
  return out;
}

std::optional<Dissection> diagonal_dissection(const ConvexLatticePolygon& polygon) {
  const auto triangulation = good_dissection(ColoredPolygon(boundary_word(polygon)));
  if (!triangulation) return std::nullopt;
  Dissection out;
  out.triangles.reserve(triangulation->triangles.size());
  for (const auto& f : triangulation->triangles) {
    out.triangles.push_back(counterclockwise({polygon[static_cast<std::size_t>(f[0])],
                                              polygon[static_cast<std::size_t>(f[1])],
                                              polygon[static_cast<std::size_t>(f[2])]}));
  }
  return out;
}

std::optional<Dissection> unit_dissection(const ConvexLatticePolygon& polygon) {
  const auto diagonal = diagonal_dissection(polygon);
  if (!diagonal) return std::nullopt;
  const std::int64_t area2 = polygon_area2(polygon);
  if (area2 % 2 != 0) {
    throw Error(ErrorCode::OddArea, "polygon doubled area " + std::to_string(area2) + " is odd");
  }
  Dissection out;
  out.triangles.reserve(static_cast<std::size_t>(area2 / 2));
  for (const auto& t : diagonal->triangles) {
    auto pieces = refine_triangle(t);
    out.triangles.insert(out.triangles.end(), pieces.triangles.begin(), pieces.triangles.end());
  }
  return out;
}

}  // namespace latdiss
