#pragma once

// Hand-built dissections with collinear vertices, shared by the unit tests and
// the acceptance run.

#include <string>
#include <vector>

#include "latdiss/dissect.hpp"
#include "latdiss/geometry.hpp"

namespace fixtures {

struct Case {
  std::string name;
  latdiss::ConvexLatticePolygon polygon;
  latdiss::Dissection dissection;
  std::size_t expected_degenerate;
};

// Pentagon fanned from (2,0), a point in the middle of its bottom side.
inline Case pentagon_bottom_vertex() {
  return {"pentagon with a vertex on its bottom side",
          latdiss::validate_convex({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}),
          {{{{2, 0}, {4, 0}, {5, 3}},
            {{2, 0}, {5, 3}, {2, 5}},
            {{2, 0}, {2, 5}, {-1, 3}},
            {{2, 0}, {-1, 3}, {0, 0}}}},
          1};
}

// 6x4 rectangle cut by the segment y = 2, which carries four vertices. The
// upper triangle spans the whole segment; below it is cut at x = 2 and x = 4.
// The sides x = 0 and x = 6 each carry one subdivision point.
inline Case rectangle_four_collinear() {
  return {"rectangle with four vertices on an interior segment",
          latdiss::validate_convex({{0, 0}, {6, 0}, {6, 4}, {0, 4}}),
          {{{{0, 0}, {6, 0}, {2, 2}},
            {{0, 0}, {2, 2}, {0, 2}},
            {{6, 0}, {4, 2}, {2, 2}},
            {{6, 0}, {6, 2}, {4, 2}},
            {{0, 2}, {6, 2}, {0, 4}},
            {{6, 2}, {6, 4}, {0, 4}}}},
          4};
}

// Square whose top-left triangle meets two triangles below it along part of
// an edge: (2,2) lies inside the edge from (0,0) to (4,4).
inline Case square_t_vertex() {
  return {"square with an interior T-vertex",
          latdiss::validate_convex({{0, 0}, {4, 0}, {4, 4}, {0, 4}}),
          {{{{0, 0}, {4, 4}, {0, 4}},
            {{0, 0}, {4, 0}, {2, 2}},
            {{4, 0}, {4, 4}, {2, 2}}}},
          1};
}

// Triangles whose vertices include no collinear triple on any edge.
inline Case plain_quad() {
  return {"quadrilateral without T-vertices",
          latdiss::validate_convex({{0, 0}, {3, 0}, {4, 3}, {1, 2}}),
          {{{{0, 0}, {3, 0}, {4, 3}}, {{0, 0}, {4, 3}, {1, 2}}}},
          0};
}

inline std::vector<Case> all() {
  return {pentagon_bottom_vertex(), rectangle_four_collinear(), square_t_vertex(), plain_quad()};
}

}  // namespace fixtures
