#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latdiss/combi.hpp"
#include "latdiss/dissect.hpp"
#include "latdiss/geometry.hpp"

namespace latdiss {

enum class VerifyMode { Integral, Unit, Any };

std::string_view to_string(VerifyMode mode);
// Throws ParseError for anything but "integral", "unit" or "any".
VerifyMode parse_verify_mode(std::string_view text);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  bool valid = false;
  std::vector<VerifyCheck> checks;
  std::size_t triangle_count = 0;
  std::int64_t doubled_area_total = 0;
  // Pairs of properly crossing triangle edges, only filled in for invalid input.
  std::vector<std::string> diagnostics;

  const VerifyCheck* find(std::string_view name) const;
};

// Exact verification that D dissects P. Checks, in order:
//   positive_orientation  every triangle counterclockwise with positive area
//   containment           every triangle vertex inside or on P
//   area_sum              doubled areas add up to polygon_area2(P)
//   edge_cancellation     triangle boundaries minus P's boundary cancel on
//                         every line, so the triangles cover P exactly once
//   mode_areas            integral: all doubled areas even; unit: all equal 2
//   lattice_coordinates   vertices are exact integers
VerifyReport verify_dissection(const ConvexLatticePolygon& polygon, const Dissection& d, VerifyMode mode);

struct PoofResult {
  Triangulation triangulation;
  std::vector<LatticePoint> points;  // vertex id -> dissection vertex
  // For each triangle of the triangulation, the index of the dissection
  // triangle it maps onto, or nullopt for a degenerate (zero-area) triangle.
  std::vector<std::optional<std::size_t>> source;
  std::size_t degenerate_count = 0;
  // Pairs (triangle edge or side of P, dissection vertex strictly inside it).
  std::size_t t_vertex_incidences = 0;
};

// Rebuilds a dissection as an abstract disk triangulation with the same
// vertices whose corners are the corners of P. Wherever a triangle edge or a
// side of P has dissection vertices in its interior, the degenerate polygon
// between the segment and that chain of vertices is fan-triangulated from the
// segment's first endpoint.
// Throws InvalidDissection if D does not dissect P, TheoremViolation if the
// result fails validate_disk.
PoofResult poof(const ConvexLatticePolygon& polygon, const Dissection& d);

// Deletes any boundary vertices of the poofed triangulation that are not
// corners of P one at a time, checking that each deletion is a contracting
// step, and compares the result with the polygon's boundary word.
bool boundary_reduces_to_polygon_word(const PoofResult& poofed, const ConvexLatticePolygon& polygon);

// A triangle of D with three distinct colors. Throws PreconditionViolated if
// the polygon's word is contractible or D is not a dissection of P, and
// TheoremViolation if no such triangle exists.
LatticeTriangle witness_noninteger(const ConvexLatticePolygon& polygon, const Dissection& d);

}  // namespace latdiss
