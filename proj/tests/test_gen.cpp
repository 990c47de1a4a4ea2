#include <doctest.h>

#include <map>

#include "latdiss/gen.hpp"
#include "latdiss/verify.hpp"
#include "support.hpp"

using namespace latdiss;
using testing::error_of;
using testing::word;

TEST_CASE("Rng is deterministic and stays in range") {
  Rng a(99), b(99);
  std::map<std::int64_t, int> counts;
  for (int i = 0; i < 6000; ++i) {
    const auto x = a.uniform(-2, 3);
    CHECK(x == b.uniform(-2, 3));
    REQUIRE(x >= -2);
    REQUIRE(x <= 3);
    ++counts[x];
  }
  CHECK(counts.size() == 6);
  for (const auto& [v, c] : counts) CHECK(c > 800);
  CHECK(Rng(1).uniform(5, 5) == 5);
}

TEST_CASE("random_convex_polygon") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const auto p = random_convex_polygon(n, 30, seed);
    REQUIRE(p.size() == n);
    for (const auto& v : p.vertices()) {
      REQUIRE(std::abs(v.x) <= 30);
      REQUIRE(std::abs(v.y) <= 30);
    }
    // revalidating is a no-op
    REQUIRE(validate_convex({p.vertices().begin(), p.vertices().end()}) == p);
  }
  CHECK(random_convex_polygon(7, 20, 5) == random_convex_polygon(7, 20, 5));
  CHECK(error_of([] { random_convex_polygon(2, 20, 0); }) == ErrorCode::GenerationFailed);
  CHECK(error_of([] { random_convex_polygon(40, 2, 0); }) == ErrorCode::GenerationFailed);
}

TEST_CASE("realize_word") {
  for (const char* s : {"ABCD", "ABCABC", "ABCDACBADC", "ABABCCDCBBDB", "AAC", "AAD", "ABD"}) {
    CAPTURE(s);
    const auto p = realize_word(word(s));
    REQUIRE(p.has_value());
    CHECK(boundary_word(*p) == word(s));
  }
  CHECK_FALSE(realize_word(word("ABE")).has_value());
}

TEST_CASE("random_dissection always verifies") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto p = random_convex_polygon(3 + seed % 10, 20, seed);
    const auto d = random_dissection(p, seed % 25, seed);
    REQUIRE(d.triangles.size() >= p.size() - 2);
    REQUIRE(verify_dissection(p, d, VerifyMode::Any).valid);
  }
}

TEST_CASE("random_triangle") {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto t = random_triangle(rng, 30, true);
    REQUIRE(signed_area2(t) != 0);
    REQUIRE(signed_area2(t) % 2 == 0);
    const auto u = random_triangle(rng, 3, false);
    REQUIRE(signed_area2(u) != 0);
  }
}
