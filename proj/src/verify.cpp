#include "latdiss/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "latdiss/checked.hpp"
#include "latdiss/error.hpp"

namespace latdiss {

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Integral: return "integral";
    case VerifyMode::Unit: return "unit";
    case VerifyMode::Any: return "any";
  }
  return "any";
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "integral") return VerifyMode::Integral;
  if (text == "unit") return VerifyMode::Unit;
  if (text == "any") return VerifyMode::Any;
  throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "' (expected integral, unit or any)");
}

const VerifyCheck* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string point_str(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string triangle_str(const LatticeTriangle& t) {
  return "[" + point_str(t.v0) + "," + point_str(t.v1) + "," + point_str(t.v2) + "]";
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Supporting line of a segment: canonical primitive direction plus the
// cross-product offset, which is constant along the line.
struct LineKey {
  std::int64_t ux, uy, offset;
  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

struct Segment1D {
  LineKey line;
  std::int64_t from, to;  // positions along the canonical direction
};

Segment1D on_line(LatticePoint a, LatticePoint b) {
  using namespace checked;
  const std::int64_t dx = sub(b.x, a.x), dy = sub(b.y, a.y);
  const std::int64_t g = gcd_abs(dx, dy);
  std::int64_t ux = dx / g, uy = dy / g;
  if (ux < 0 || (ux == 0 && uy < 0)) {
    ux = -ux;
    uy = -uy;
  }
  const LineKey key{ux, uy, sub(mul(ux, a.y), mul(uy, a.x))};
  return {key, add(mul(ux, a.x), mul(uy, a.y)), add(mul(ux, b.x), mul(uy, b.y))};
}

bool properly_cross(LatticePoint p1, LatticePoint p2, LatticePoint q1, LatticePoint q2) {
  auto sign = [](std::int64_t v) { return (v > 0) - (v < 0); };
  const int a = sign(signed_area2(p1, p2, q1)), b = sign(signed_area2(p1, p2, q2));
  const int c = sign(signed_area2(q1, q2, p1)), d = sign(signed_area2(q1, q2, p2));
  return a * b < 0 && c * d < 0;
}

std::vector<std::string> crossing_diagnostics(const Dissection& d) {
  constexpr std::size_t kMaxTriangles = 2000, kMaxReports = 10;
  std::vector<std::string> out;
  if (d.triangles.size() > kMaxTriangles) return out;
  for (std::size_t i = 0; i < d.triangles.size(); ++i) {
    const LatticePoint a[3] = {d.triangles[i].v0, d.triangles[i].v1, d.triangles[i].v2};
    for (std::size_t j = i + 1; j < d.triangles.size(); ++j) {
      const LatticePoint b[3] = {d.triangles[j].v0, d.triangles[j].v1, d.triangles[j].v2};
      bool crossing = false;
      for (int e = 0; e < 3 && !crossing; ++e) {
        for (int f = 0; f < 3 && !crossing; ++f) {
          crossing = properly_cross(a[e], a[(e + 1) % 3], b[f], b[(f + 1) % 3]);
        }
      }
      if (crossing) {
        out.push_back("edges of triangles " + std::to_string(i) + " " + triangle_str(d.triangles[i]) + " and " +
                      std::to_string(j) + " " + triangle_str(d.triangles[j]) + " cross");
        if (out.size() >= kMaxReports) return out;
      }
    }
  }
  return out;
}

}  // namespace

VerifyReport verify_dissection(const ConvexLatticePolygon& polygon, const Dissection& d, VerifyMode mode) {
  VerifyReport report;
  report.triangle_count = d.triangles.size();

  std::vector<std::int64_t> areas;
  areas.reserve(d.triangles.size());
  for (const auto& t : d.triangles) areas.push_back(signed_area2(t));

  {
    VerifyCheck c{"positive_orientation", true, "all triangles counterclockwise with positive area"};
    for (std::size_t i = 0; i < areas.size(); ++i) {
      if (areas[i] <= 0) {
        c = {"positive_orientation", false,
             "triangle " + std::to_string(i) + " " + triangle_str(d.triangles[i]) + " has doubled area " +
                 std::to_string(areas[i])};
        break;
      }
    }
    report.checks.push_back(c);
  }

  {
    VerifyCheck c{"containment", true, "all vertices inside or on the polygon"};
    for (std::size_t i = 0; i < d.triangles.size() && c.passed; ++i) {
      for (const auto& v : {d.triangles[i].v0, d.triangles[i].v1, d.triangles[i].v2}) {
        if (!polygon.contains(v)) {
          c = {"containment", false,
               "vertex " + point_str(v) + " of triangle " + std::to_string(i) + " is outside the polygon"};
          break;
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    std::int64_t total = 0;
    for (auto a : areas) total = checked::add(total, a);
    report.doubled_area_total = total;
    const std::int64_t expected = polygon_area2(polygon);
    report.checks.push_back({"area_sum", total == expected,
                             "doubled areas sum to " + std::to_string(total) + ", polygon doubled area " +
                                 std::to_string(expected)});
  }

  {
    // Boundary 1-chain of the triangles minus that of the polygon, per line.
    std::map<std::pair<LineKey, std::int64_t>, std::int64_t> delta;
    auto add_edge = [&](LatticePoint a, LatticePoint b, std::int64_t weight) {
      if (a == b) return;
      const auto s = on_line(a, b);
      delta[{s.line, s.from}] += weight;
      delta[{s.line, s.to}] -= weight;
    };
    for (const auto& t : d.triangles) {
      const LatticeTriangle ccw = counterclockwise(t);
      add_edge(ccw.v0, ccw.v1, 1);
      add_edge(ccw.v1, ccw.v2, 1);
      add_edge(ccw.v2, ccw.v0, 1);
    }
    for (std::size_t i = 0; i < polygon.size(); ++i) add_edge(polygon[i], polygon[i + 1], -1);

    VerifyCheck c{"edge_cancellation", true, "triangle edges cancel in pairs except along the polygon boundary"};
    for (const auto& [where, value] : delta) {
      if (value != 0) {
        const auto& [line, pos] = where;
        c = {"edge_cancellation", false,
             "coverage jumps by " + std::to_string(value) + " at position " + std::to_string(pos) +
                 " on the line with direction (" + std::to_string(line.ux) + "," + std::to_string(line.uy) +
                 ") and offset " + std::to_string(line.offset)};
        break;
      }
    }
    report.checks.push_back(c);
  }

  {
    VerifyCheck c{"mode_areas", true, "mode any places no constraint on areas"};
    if (mode == VerifyMode::Integral) c.detail = "all doubled areas even";
    if (mode == VerifyMode::Unit) c.detail = "all doubled areas equal 2";
    for (std::size_t i = 0; i < areas.size(); ++i) {
      const bool bad = (mode == VerifyMode::Integral && areas[i] % 2 != 0) ||
                       (mode == VerifyMode::Unit && areas[i] != 2);
      if (bad) {
        c = {"mode_areas", false,
             "triangle " + std::to_string(i) + " " + triangle_str(d.triangles[i]) + " has doubled area " +
                 std::to_string(areas[i]) + " (mode " + std::string(to_string(mode)) + ")"};
        break;
      }
    }
    report.checks.push_back(c);
  }

  report.checks.push_back({"lattice_coordinates", true, "all coordinates are exact integers"});

  report.valid = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
  if (!report.valid) report.diagnostics = crossing_diagnostics(d);
  return report;
}

namespace {

// Dissection vertices strictly inside segment a-b, ordered from a to b.
std::vector<VertexId> interior_vertices(LatticePoint a, LatticePoint b, const std::map<LatticePoint, VertexId>& ids,
                                        const std::vector<LatticePoint>& points) {
  const std::int64_t dx = checked::sub(b.x, a.x), dy = checked::sub(b.y, a.y);
  const std::int64_t g = gcd_abs(dx, dy);
  std::vector<VertexId> out;
  if (g <= 1) return out;
  if (static_cast<std::uint64_t>(g) <= points.size()) {
    for (std::int64_t j = 1; j < g; ++j) {
      const LatticePoint p{a.x + j * (dx / g), a.y + j * (dy / g)};
      if (auto it = ids.find(p); it != ids.end()) out.push_back(it->second);
    }
    return out;
  }
  std::vector<std::pair<std::int64_t, VertexId>> hits;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p == a || p == b || !collinear(a, b, p)) continue;
    const std::int64_t t = checked::add(checked::mul(p.x - a.x, dx), checked::mul(p.y - a.y, dy));
    if (t > 0 && t < checked::add(checked::mul(dx, dx), checked::mul(dy, dy))) {
      hits.emplace_back(t, static_cast<VertexId>(i));
    }
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& h : hits) out.push_back(h.second);
  return out;
}

}  // namespace

PoofResult poof(const ConvexLatticePolygon& polygon, const Dissection& d) {
  const auto check = verify_dissection(polygon, d, VerifyMode::Any);
  if (!check.valid) {
    for (const auto& c : check.checks) {
      if (!c.passed) throw Error(ErrorCode::InvalidDissection, c.name + ": " + c.detail);
    }
  }

  PoofResult out;
  std::map<LatticePoint, VertexId> ids;
  auto id_of = [&](LatticePoint p) {
    auto [it, inserted] = ids.emplace(p, static_cast<VertexId>(out.points.size()));
    if (inserted) out.points.push_back(p);
    return it->second;
  };
  for (const auto& t : d.triangles) {
    id_of(t.v0);
    id_of(t.v1);
    id_of(t.v2);
  }

  auto& tri = out.triangulation;
  for (const auto& p : out.points) tri.vertex_colors.push_back(to_char(color_of(p)));

  for (std::size_t i = 0; i < d.triangles.size(); ++i) {
    const LatticeTriangle t = counterclockwise(d.triangles[i]);
    const LatticePoint corners[3] = {t.v0, t.v1, t.v2};
    tri.triangles.push_back({ids.at(t.v0), ids.at(t.v1), ids.at(t.v2)});
    out.source.emplace_back(i);
    for (int e = 0; e < 3; ++e) {
      const LatticePoint a = corners[e], b = corners[(e + 1) % 3];
      const auto chain = interior_vertices(a, b, ids, out.points);
      if (chain.empty()) continue;
      // Fan of the degenerate polygon a, chain..., b from a.
      const VertexId base = ids.at(a);
      std::vector<VertexId> rim(chain);
      rim.push_back(ids.at(b));
      for (std::size_t k = 0; k + 1 < rim.size(); ++k) {
        tri.triangles.push_back({base, rim[k], rim[k + 1]});
        out.source.emplace_back(std::nullopt);
      }
      out.degenerate_count += chain.size();
      out.t_vertex_incidences += chain.size();
    }
  }

  // Subdivision points on a side of P are closed off by a degenerate polygon
  // spanning the whole side, so the corners are exactly P's corners.
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const VertexId base = ids.at(polygon[i]);
    tri.corners.push_back(base);
    auto rim = interior_vertices(polygon[i], polygon[i + 1], ids, out.points);
    if (rim.empty()) continue;
    const std::size_t chain = rim.size();
    rim.push_back(ids.at(polygon[i + 1]));
    for (std::size_t k = 0; k + 1 < rim.size(); ++k) {
      tri.triangles.push_back({base, rim[k], rim[k + 1]});
      out.source.emplace_back(std::nullopt);
    }
    out.degenerate_count += chain;
    out.t_vertex_incidences += chain;
  }

  const auto disk = validate_disk(tri);
  if (!disk.ok()) {
    throw Error(ErrorCode::TheoremViolation, "poofed triangulation is not a disk: " + disk.violations.front().message);
  }
  return out;
}

bool boundary_reduces_to_polygon_word(const PoofResult& poofed, const ConvexLatticePolygon& polygon) {
  const auto& tri = poofed.triangulation;
  std::vector<VertexId> ring = tri.corners;
  std::vector<bool> is_corner(poofed.points.size(), false);
  for (const auto& v : polygon.vertices()) {
    for (std::size_t i = 0; i < poofed.points.size(); ++i) {
      if (poofed.points[i] == v) is_corner[i] = true;
    }
  }
  auto color = [&](VertexId v) { return tri.vertex_colors[static_cast<std::size_t>(v)]; };
  for (std::size_t i = 0; i < ring.size();) {
    if (is_corner[static_cast<std::size_t>(ring[i])]) {
      ++i;
      continue;
    }
    const std::size_t n = ring.size();
    if (n < 2) return false;
    const char a = color(ring[(i + n - 1) % n]), b = color(ring[i]), c = color(ring[(i + 1) % n]);
    if (a != b && b != c && a != c) return false;
    ring.erase(ring.begin() + static_cast<long>(i));
  }
  std::string letters;
  for (VertexId v : ring) letters.push_back(color(v));
  return CyclicWord(letters) == boundary_word(polygon);
}

LatticeTriangle witness_noninteger(const ConvexLatticePolygon& polygon, const Dissection& d) {
  const auto word = boundary_word(polygon);
  if (decide_contractible(word).contractible) {
    throw Error(ErrorCode::PreconditionViolated,
                "boundary word (" + word.letters() + ") is contractible; integral dissections exist");
  }
  const auto report = verify_dissection(polygon, d, VerifyMode::Any);
  if (!report.valid) throw Error(ErrorCode::PreconditionViolated, "input is not a dissection of the polygon");
  for (const auto& t : d.triangles) {
    if (is_tricolor(t)) return t;
  }
  throw Error(ErrorCode::TheoremViolation, "no tricolor triangle in a dissection of a polygon with word (" +
                                               word.letters() + ")");
}

}  // namespace latdiss
