#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "latdiss/dissect.hpp"
#include "latdiss/geometry.hpp"
#include "latdiss/words.hpp"

namespace latdiss {

// Seeded generator with platform-independent output: mt19937_64 bits and
// rejection sampling instead of the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::int64_t kDefaultCoordBound = 50;

// Strictly convex lattice n-gon with all coordinates in [-coord_bound,
// coord_bound]: random edge vectors summing to zero with pairwise distinct
// directions, sorted by angle. Throws GenerationFailed if n < 3 or no polygon
// is found within the retry budget.
ConvexLatticePolygon random_convex_polygon(std::size_t n, std::int64_t coord_bound, std::uint64_t seed);

struct RealizeOptions {
  std::int64_t coord_bound = kDefaultCoordBound;
  std::int64_t max_edge_component = 4;  // edge vectors searched in [-k, k]^2, k = 1..max
  std::uint64_t node_budget = 4'000'000;
};

// Searches for a strictly convex lattice polygon whose boundary word equals w
// up to rotation. Edges are chosen in increasing angle with the parity of each
// edge vector fixed by the colors it joins; failed states (edge index, last
// direction, partial sum) are memoized. nullopt if the bounded search fails.
std::optional<ConvexLatticePolygon> realize_word(const CyclicWord& w, const RealizeOptions& options = {});

// Fan-triangulates P from its first corner, then `depth` times splits a random
// triangle at a random lattice point of the closed triangle (interior or edge)
// that is not one of its vertices.
Dissection random_dissection(const ConvexLatticePolygon& polygon, std::size_t depth, std::uint64_t seed);

// Nondegenerate lattice triangle with coordinates in [-coord_bound, coord_bound].
LatticeTriangle random_triangle(Rng& rng, std::int64_t coord_bound, bool even_area);

}  // namespace latdiss
