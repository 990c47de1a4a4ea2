#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latdiss/words.hpp"

namespace latdiss {

using VertexId = int;
using Face = std::array<VertexId, 3>;

// A combinatorial polygon with colored corners.
class ColoredPolygon {
 public:
  // Throws TooSmall for fewer than 3 corners.
  explicit ColoredPolygon(CyclicWord colors);

  std::size_t size() const { return colors_.size(); }
  const CyclicWord& word() const { return colors_; }

 private:
  CyclicWord colors_;
};

// Abstract triangulation with dense vertex ids 0..V-1. `corners` lists the
// boundary cycle explicitly so that validate_disk can cross-check it.
struct Triangulation {
  std::vector<char> vertex_colors;
  std::vector<Face> triangles;
  std::vector<VertexId> corners;

  std::size_t vertex_count() const { return vertex_colors.size(); }
};

enum class DiskViolationKind {
  BadTriangle,
  UnusedVertex,
  EdgeOvershared,
  BoundaryMismatch,
  Disconnected,
  EulerCharacteristic,
  VertexLink,
};

struct DiskViolation {
  DiskViolationKind kind;
  std::vector<VertexId> simplex;  // offending simplex, if any
  std::string message;
};

struct DiskReport {
  std::vector<DiskViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that the triangles form a topological disk bounded by `corners`:
// edges lie in at most two triangles, the edges in exactly one triangle form
// the corner cycle (up to rotation and reflection), triangles are connected
// through edges, V - E + F = 1, and every vertex link is a single cycle
// (interior) or a single path (corner).
DiskReport validate_disk(const Triangulation& t);

CyclicWord boundary_word_of(const Triangulation& t);

// First triangle whose three colors are pairwise distinct.
std::optional<Face> find_tricolor(const Triangulation& t);

struct ExternalTriangle {
  std::size_t prev, middle, next;  // consecutive corner indices
  bool good;                       // some color repeats
};

std::vector<ExternalTriangle> external_triangles(const ColoredPolygon& g);

// Deletes corner i (the middle of an external triangle). Throws TooSmall for a
// triangle.
ColoredPolygon remove_external(const ColoredPolygon& g, std::size_t i);

// Diagonal triangulation with every triangle good, built by replaying the
// stack decider's deletions as ear removals; nullopt if the word is not
// contractible. Corners are vertices 0..n-1 in order.
std::optional<Triangulation> good_dissection(const ColoredPolygon& g);

std::uint64_t catalan(unsigned n);

inline constexpr std::size_t kMaxEnumerationCorners = 14;

// Calls `visit` once per diagonal triangulation of the n-gon on corners
// 0..n-1 (Catalan(n-2) of them). `visit` returns false to stop early.
// Returns the number visited. Throws BoundExceeded outside 3 <= n <= 14.
std::uint64_t for_each_diagonal_triangulation(
    std::size_t n, const std::function<bool(std::span<const Face>)>& visit);

std::vector<std::vector<Face>> enumerate_diagonal_triangulations(std::size_t n);

// Brute force: does some diagonal triangulation of the polygon colored by w
// consist of good triangles only.
bool has_good_diagonal_triangulation(const CyclicWord& w);

struct SpernerReport {
  std::string word;
  bool contractible = false;
  std::uint64_t diagonal_examined = 0;
  std::uint64_t tricolor_free = 0;
  std::size_t star_colorings = 0;
  std::size_t star_colorings_with_tricolor = 0;
  bool biconditional_holds = false;
};

inline constexpr std::size_t kMaxSpernerLength = 12;

// Enumerates every diagonal triangulation colored by w and every star
// triangulation (one interior vertex joined to all corners, colored with each
// of A-D and each letter of w). Throws BoundExceeded for |w| > 12 and
// TheoremViolation if tricolor-free existence disagrees with contractibility
// or a non-contractible word admits a tricolor-free star.
SpernerReport sperner_check(const CyclicWord& w);

}  // namespace latdiss
