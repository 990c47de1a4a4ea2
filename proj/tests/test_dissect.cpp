#include <doctest.h>

#include <algorithm>
#include <random>

#include "latdiss/dissect.hpp"
#include "latdiss/gen.hpp"
#include "latdiss/verify.hpp"
#include "support.hpp"

using namespace latdiss;
using testing::error_of;
using testing::polygon;
using testing::word;

namespace {

std::vector<std::int64_t> areas(const std::vector<LatticeTriangle>& ts) {
  std::vector<std::int64_t> out;
  for (const auto& t : ts) out.push_back(signed_area2(t));
  return out;
}

}  // namespace

TEST_CASE("UnimodularAffineMap") {
  CHECK(error_of([] { UnimodularAffineMap(2, 0, 0, 1); }) == ErrorCode::NotUnimodular);
  CHECK(error_of([] { UnimodularAffineMap(0, 0, 0, 0); }) == ErrorCode::NotUnimodular);
  const UnimodularAffineMap a(2, 1, 1, 1, 3, -2), b(0, 1, -1, 0, 5, 7);
  CHECK(a.determinant() == 1);
  CHECK(b.determinant() == 1);
  CHECK(UnimodularAffineMap(0, 1, 1, 0).determinant() == -1);
  const LatticePoint p{4, -9};
  CHECK(a(p) == LatticePoint{2 * 4 - 9 + 3, 4 - 9 - 2});
  CHECK((a * b)(p) == a(b(p)));
  CHECK(a.inverse()(a(p)) == p);
  CHECK(a * a.inverse() == UnimodularAffineMap::identity());
  CHECK(UnimodularAffineMap::translation(1, 2)(p) == LatticePoint{5, -7});
}

TEST_CASE("normalize examples") {
  const auto n1 = normalize({{0, 0}, {2, 0}, {1, 1}});
  CHECK(n1.normal == NormalizedTriangle{2, 1, 1});

  const auto n2 = normalize({{0, 0}, {0, 2}, {-1, 1}});
  CHECK(n2.normal == NormalizedTriangle{2, 1, 1});
  CHECK(std::abs(n2.map.determinant()) == 1);
  CHECK(n2.map(n2.source.v0) == LatticePoint{0, 0});
  CHECK(n2.map(n2.source.v1) == LatticePoint{2, 0});
  CHECK(n2.map(n2.source.v2) == LatticePoint{1, 1});

  CHECK(error_of([] { normalize({{0, 0}, {1, 0}, {0, 1}}); }) == ErrorCode::NotIntegerArea);
  CHECK(error_of([] { normalize({{0, 0}, {1, 1}, {2, 2}}); }) == ErrorCode::Degenerate);
}

TEST_CASE("normalize on random even-area triangles") {
  Rng rng(3);
  for (int it = 0; it < 3000; ++it) {
    const auto t = random_triangle(rng, 30, true);
    const auto n = normalize(t);
    const auto [d, p, q] = n.normal;
    REQUIRE(d > 0);
    REQUIRE(d % 2 == 0);
    REQUIRE(q >= 1);
    REQUIRE(1 <= p);
    REQUIRE(p <= q);
    REQUIRE(d * q == std::abs(signed_area2(t)));
    REQUIRE(std::abs(n.map.determinant()) == 1);
    REQUIRE(n.map(n.source.v0) == LatticePoint{0, 0});
    REQUIRE(n.map(n.source.v1) == LatticePoint{d, 0});
    REQUIRE(n.map(n.source.v2) == LatticePoint{p, q});
    // source is a relabeling of t
    std::vector<LatticePoint> a{t.v0, t.v1, t.v2}, b{n.source.v0, n.source.v1, n.source.v2};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
    // same-color relation is preserved by the map
    for (const auto& u : a)
      for (const auto& v : a) REQUIRE(same_color(u, v) == same_color(n.map(u), n.map(v)));
  }
}

TEST_CASE("split_with_point") {
  const LatticeTriangle t{{0, 0}, {2, 0}, {1, 2}};
  auto inner = areas(split_with_point(t, {1, 1}));
  std::sort(inner.begin(), inner.end());
  CHECK(inner == std::vector<std::int64_t>{1, 1, 2});

  CHECK(areas(split_with_point({{0, 0}, {4, 0}, {0, 1}}, {2, 0})) == std::vector<std::int64_t>{2, 2});
  CHECK(error_of([&] { split_with_point(t, {5, 5}); }) == ErrorCode::OutsideTriangle);
  CHECK(error_of([&] { split_with_point(t, {2, 0}); }) == ErrorCode::IsVertex);
  CHECK(error_of([] { split_with_point({{0, 0}, {1, 1}, {3, 3}}, {2, 2}); }) == ErrorCode::Degenerate);

  // clockwise input still gives counterclockwise pieces
  for (const auto a : areas(split_with_point({{0, 0}, {1, 2}, {2, 0}}, {1, 1}))) CHECK(a > 0);
}

TEST_CASE("refine_triangle examples") {
  const LatticeTriangle unit{{0, 0}, {2, 0}, {1, 1}};
  const auto same = refine_triangle(unit);
  REQUIRE(same.triangles.size() == 1);
  CHECK(signed_area2(same.triangles[0]) == 2);

  const auto halves = refine_triangle({{0, 0}, {4, 0}, {0, 1}});
  CHECK(halves.triangles.size() == 2);
  CHECK(verify_dissection(polygon({{0, 0}, {4, 0}, {0, 1}}), halves, VerifyMode::Unit).valid);

  const auto thirds = refine_triangle({{0, 0}, {2, 0}, {1, 3}});
  CHECK(thirds.triangles.size() == 3);
  CHECK(verify_dissection(polygon({{0, 0}, {2, 0}, {1, 3}}), thirds, VerifyMode::Unit).valid);

  CHECK(error_of([] { refine_triangle({{0, 0}, {1, 0}, {0, 1}}); }) == ErrorCode::NotIntegerArea);
  CHECK(error_of([] { refine_triangle({{0, 0}, {1, 0}, {2, 0}}); }) == ErrorCode::Degenerate);
}

TEST_CASE("refine_triangle on random triangles") {
  Rng rng(41);
  for (int it = 0; it < 200; ++it) {
    const auto t = random_triangle(rng, 12, true);
    const auto d = refine_triangle(t);
    const auto area = std::abs(signed_area2(t));
    REQUIRE(d.triangles.size() == static_cast<std::size_t>(area / 2));
    for (const auto a : areas(d.triangles)) REQUIRE(a == 2);
    REQUIRE(verify_dissection(validate_convex({t.v0, t.v1, t.v2}), d, VerifyMode::Unit).valid);
  }
}

TEST_CASE("diagonal_dissection") {
  CHECK_FALSE(diagonal_dissection(polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).has_value());

  const auto tri = polygon({{0, 0}, {2, 0}, {1, 1}});
  const auto one = diagonal_dissection(tri);
  REQUIRE(one.has_value());
  REQUIRE(one->triangles.size() == 1);
  CHECK(signed_area2(one->triangles[0]) == 2);

  const auto p = realize_word(word("ABABCCDCBBDB"));
  REQUIRE(p.has_value());
  const auto d = diagonal_dissection(*p);
  REQUIRE(d.has_value());
  CHECK(d->triangles.size() == 10);
  for (const auto a : areas(d->triangles)) CHECK(a % 2 == 0);
  CHECK(verify_dissection(*p, *d, VerifyMode::Integral).valid);
}

TEST_CASE("unit_dissection") {
  CHECK_FALSE(unit_dissection(polygon({{0, 0}, {3, 0}, {3, 5}, {0, 5}})).has_value());

  const auto tri = polygon({{0, 0}, {4, 0}, {0, 1}});
  const auto d = unit_dissection(tri);
  REQUIRE(d.has_value());
  CHECK(d->triangles.size() == 2);
  CHECK(verify_dissection(tri, *d, VerifyMode::Unit).valid);

  const auto hex = realize_word(word("ABCABC"));
  REQUIRE(hex.has_value());
  CHECK_FALSE(unit_dissection(*hex).has_value());

  const auto dodecagon = realize_word(word("ABABCCDCBBDB"));
  REQUIRE(dodecagon.has_value());
  const auto u = unit_dissection(*dodecagon);
  REQUIRE(u.has_value());
  CHECK(static_cast<std::int64_t>(u->triangles.size()) == polygon_area2(*dodecagon) / 2);
  CHECK(verify_dissection(*dodecagon, *u, VerifyMode::Unit).valid);
}
