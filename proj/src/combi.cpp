#include "latdiss/combi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "latdiss/error.hpp"

namespace latdiss {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool good_colors(char a, char b, char c) { return a == b || b == c || a == c; }

std::string edge_name(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

std::string face_name(const Face& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "}";
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ColoredPolygon::ColoredPolygon(CyclicWord colors) : colors_(std::move(colors)) {
  if (colors_.size() < 3) {
    throw Error(ErrorCode::TooSmall, "a colored polygon needs at least 3 corners");
  }
}

DiskReport validate_disk(const Triangulation& t) {
  DiskReport report;
  auto fail = [&](DiskViolationKind kind, std::vector<VertexId> simplex, std::string msg) {
    report.violations.push_back({kind, std::move(simplex), std::move(msg)});
  };
  const auto V = static_cast<VertexId>(t.vertex_count());

  std::set<std::array<VertexId, 3>> seen_faces;
  for (const auto& f : t.triangles) {
    bool bad = false;
    for (VertexId v : f) bad |= v < 0 || v >= V;
    bad |= f[0] == f[1] || f[1] == f[2] || f[0] == f[2];
    if (bad) {
      fail(DiskViolationKind::BadTriangle, {f[0], f[1], f[2]},
           "triangle " + face_name(f) + " has repeated or out-of-range vertices");
      continue;
    }
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (!seen_faces.insert(sorted).second) {
      fail(DiskViolationKind::BadTriangle, {f[0], f[1], f[2]}, "triangle " + face_name(f) + " is listed twice");
    }
  }
  if (t.triangles.empty()) fail(DiskViolationKind::BadTriangle, {}, "no triangles");
  if (!report.ok()) return report;

  std::vector<int> uses(static_cast<std::size_t>(V), 0);
  std::map<Edge, std::vector<std::size_t>> edge_faces;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& f = t.triangles[i];
    for (int k = 0; k < 3; ++k) {
      ++uses[static_cast<std::size_t>(f[k])];
      edge_faces[make_edge(f[k], f[(k + 1) % 3])].push_back(i);
    }
  }
  for (VertexId v = 0; v < V; ++v) {
    if (uses[static_cast<std::size_t>(v)] == 0) {
      fail(DiskViolationKind::UnusedVertex, {v}, "vertex " + std::to_string(v) + " is in no triangle");
    }
  }

  std::set<Edge> boundary_edges;
  for (const auto& [e, faces] : edge_faces) {
    if (faces.size() > 2) {
      fail(DiskViolationKind::EdgeOvershared, {e.first, e.second},
           "edge " + edge_name(e) + " lies in " + std::to_string(faces.size()) + " triangles");
    } else if (faces.size() == 1) {
      boundary_edges.insert(e);
    }
  }

  // Boundary cycle versus the declared corners.
  const auto& corners = t.corners;
  std::set<VertexId> corner_set(corners.begin(), corners.end());
  bool corners_ok = corners.size() >= 3 && corner_set.size() == corners.size();
  for (VertexId c : corners) corners_ok &= c >= 0 && c < V;
  if (!corners_ok) {
    fail(DiskViolationKind::BoundaryMismatch, corners, "corner list must be at least 3 distinct vertex ids");
  } else {
    std::set<Edge> corner_edges;
    for (std::size_t i = 0; i < corners.size(); ++i) {
      corner_edges.insert(make_edge(corners[i], corners[(i + 1) % corners.size()]));
    }
    for (const auto& e : boundary_edges) {
      if (!corner_edges.count(e)) {
        fail(DiskViolationKind::BoundaryMismatch, {e.first, e.second},
             "boundary edge " + edge_name(e) + " is not a side of the corner cycle");
      }
    }
    for (const auto& e : corner_edges) {
      if (!boundary_edges.count(e)) {
        fail(DiskViolationKind::BoundaryMismatch, {e.first, e.second},
             "corner side " + edge_name(e) + " is not a boundary edge");
      }
    }
  }

  UnionFind components(t.triangles.size());
  for (const auto& [e, faces] : edge_faces) {
    for (std::size_t k = 1; k < faces.size(); ++k) components.unite(faces[0], faces[k]);
  }
  for (std::size_t i = 1; i < t.triangles.size(); ++i) {
    if (components.find(i) != components.find(0)) {
      const auto& f = t.triangles[i];
      fail(DiskViolationKind::Disconnected, {f[0], f[1], f[2]},
           "triangle " + face_name(f) + " is not edge-connected to triangle " + face_name(t.triangles[0]));
      break;
    }
  }

  const long euler = static_cast<long>(V) - static_cast<long>(edge_faces.size()) +
                     static_cast<long>(t.triangles.size());
  if (euler != 1) {
    fail(DiskViolationKind::EulerCharacteristic, {},
         "V - E + F = " + std::to_string(euler) + ", expected 1");
  }

  // Vertex links: the edges opposite v in its triangles.
  std::vector<std::vector<Edge>> link(static_cast<std::size_t>(V));
  for (const auto& f : t.triangles) {
    for (int k = 0; k < 3; ++k) {
      link[static_cast<std::size_t>(f[k])].push_back({f[(k + 1) % 3], f[(k + 2) % 3]});
    }
  }
  for (VertexId v = 0; v < V; ++v) {
    const auto& edges = link[static_cast<std::size_t>(v)];
    if (edges.empty()) continue;
    std::map<VertexId, int> degree;
    std::map<VertexId, VertexId> index;
    for (const auto& [a, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    for (const auto& [u, d] : degree) index.emplace(u, static_cast<VertexId>(index.size()));
    UnionFind uf(index.size());
    for (const auto& [a, b] : edges) uf.unite(static_cast<std::size_t>(index[a]), static_cast<std::size_t>(index[b]));
    std::set<std::size_t> roots;
    for (const auto& [u, i] : index) roots.insert(uf.find(static_cast<std::size_t>(i)));

    int ends = 0;
    bool over = false;
    for (const auto& [u, d] : degree) {
      if (d == 1) ++ends;
      if (d > 2) over = true;
    }
    const bool is_corner = corner_set.count(v) > 0;
    const bool fan_ok = !over && roots.size() == 1 && (is_corner ? ends == 2 : ends == 0);
    if (!fan_ok) {
      fail(DiskViolationKind::VertexLink, {v},
           std::string(is_corner ? "corner" : "interior") + " vertex " + std::to_string(v) +
               (is_corner ? " is not surrounded by a single open fan" : " is not surrounded by a single closed fan"));
    }
  }
  return report;
}

CyclicWord boundary_word_of(const Triangulation& t) {
  std::string letters;
  for (VertexId c : t.corners) letters.push_back(t.vertex_colors.at(static_cast<std::size_t>(c)));
  return CyclicWord(std::move(letters));
}

std::optional<Face> find_tricolor(const Triangulation& t) {
  for (const auto& f : t.triangles) {
    const char a = t.vertex_colors.at(static_cast<std::size_t>(f[0]));
    const char b = t.vertex_colors.at(static_cast<std::size_t>(f[1]));
    const char c = t.vertex_colors.at(static_cast<std::size_t>(f[2]));
    if (!good_colors(a, b, c)) return f;
  }
  return std::nullopt;
}

std::vector<ExternalTriangle> external_triangles(const ColoredPolygon& g) {
  const std::size_t n = g.size();
  const auto& w = g.word();
  std::vector<ExternalTriangle> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
    out.push_back({prev, i, next, good_colors(w[prev], w[i], w[next])});
  }
  return out;
}

ColoredPolygon remove_external(const ColoredPolygon& g, std::size_t i) {
  if (g.size() <= 3) throw Error(ErrorCode::TooSmall, "cannot remove an external triangle from a triangle");
  std::string s = g.word().letters();
  s.erase(i % s.size(), 1);
  return ColoredPolygon(CyclicWord(std::move(s)));
}

std::optional<Triangulation> good_dissection(const ColoredPolygon& g) {
  const auto& w = g.word();
  const auto result = decide_contractible(w);
  if (!result.contractible) return std::nullopt;
  Triangulation t;
  t.vertex_colors.assign(w.letters().begin(), w.letters().end());
  for (std::size_t i = 0; i < w.size(); ++i) t.corners.push_back(static_cast<VertexId>(i));
  for (const auto& s : result.trace.steps) {
    t.triangles.push_back({static_cast<VertexId>(s.left), static_cast<VertexId>(s.deleted),
                           static_cast<VertexId>(s.right)});
  }
  return t;
}

std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

namespace {

// Triangulations of the fan interval 0..L with base edge (0, L), stored flat:
// entry L holds Catalan(L-1) blocks of L-1 faces each.
const std::vector<std::vector<Face>>& interval_table() {
  static const std::vector<std::vector<Face>> table = [] {
    constexpr std::size_t kMaxLength = kMaxEnumerationCorners - 2;
    std::vector<std::vector<Face>> tab(kMaxLength + 1);
    for (std::size_t L = 2; L <= kMaxLength; ++L) {
      auto& out = tab[L];
      for (std::size_t k = 1; k < L; ++k) {
        const std::size_t left_faces = k - 1, right_faces = L - k - 1;
        const std::size_t left_count = left_faces == 0 ? 1 : tab[k].size() / left_faces;
        const std::size_t right_count = right_faces == 0 ? 1 : tab[L - k].size() / right_faces;
        for (std::size_t a = 0; a < left_count; ++a) {
          for (std::size_t b = 0; b < right_count; ++b) {
            out.push_back({0, static_cast<VertexId>(k), static_cast<VertexId>(L)});
            for (std::size_t f = 0; f < left_faces; ++f) out.push_back(tab[k][a * left_faces + f]);
            for (std::size_t f = 0; f < right_faces; ++f) {
              Face face = tab[L - k][b * right_faces + f];
              for (auto& v : face) v += static_cast<VertexId>(k);
              out.push_back(face);
            }
          }
        }
      }
    }
    return tab;
  }();
  return table;
}

}  // namespace

std::uint64_t for_each_diagonal_triangulation(
    std::size_t n, const std::function<bool(std::span<const Face>)>& visit) {
  if (n < 3 || n > kMaxEnumerationCorners) {
    throw Error(ErrorCode::BoundExceeded, "diagonal triangulations enumerated for 3 <= n <= " +
                                              std::to_string(kMaxEnumerationCorners) + ", got " +
                                              std::to_string(n));
  }
  const auto& tab = interval_table();
  const std::size_t L = n - 1;
  std::vector<Face> buffer;
  buffer.reserve(n - 2);
  std::uint64_t visited = 0;
  for (std::size_t k = 1; k < L; ++k) {
    const std::size_t left_faces = k - 1, right_faces = L - k - 1;
    const std::size_t left_count = left_faces == 0 ? 1 : tab[k].size() / left_faces;
    const std::size_t right_count = right_faces == 0 ? 1 : tab[L - k].size() / right_faces;
    for (std::size_t a = 0; a < left_count; ++a) {
      for (std::size_t b = 0; b < right_count; ++b) {
        buffer.clear();
        buffer.push_back({0, static_cast<VertexId>(k), static_cast<VertexId>(L)});
        for (std::size_t f = 0; f < left_faces; ++f) buffer.push_back(tab[k][a * left_faces + f]);
        for (std::size_t f = 0; f < right_faces; ++f) {
          Face face = tab[L - k][b * right_faces + f];
          for (auto& v : face) v += static_cast<VertexId>(k);
          buffer.push_back(face);
        }
        ++visited;
        if (!visit(buffer)) return visited;
      }
    }
  }
  return visited;
}

std::vector<std::vector<Face>> enumerate_diagonal_triangulations(std::size_t n) {
  std::vector<std::vector<Face>> out;
  for_each_diagonal_triangulation(n, [&](std::span<const Face> faces) {
    out.emplace_back(faces.begin(), faces.end());
    return true;
  });
  return out;
}

bool has_good_diagonal_triangulation(const CyclicWord& w) {
  if (w.size() < 3) return true;
  const auto& s = w.letters();
  bool found = false;
  for_each_diagonal_triangulation(w.size(), [&](std::span<const Face> faces) {
    found = std::all_of(faces.begin(), faces.end(), [&](const Face& f) {
      return good_colors(s[static_cast<std::size_t>(f[0])], s[static_cast<std::size_t>(f[1])],
                         s[static_cast<std::size_t>(f[2])]);
    });
    return !found;
  });
  return found;
}

SpernerReport sperner_check(const CyclicWord& w) {
  const std::size_t n = w.size();
  if (n > kMaxSpernerLength) {
    throw Error(ErrorCode::BoundExceeded, "sperner check limited to words of length " +
                                              std::to_string(kMaxSpernerLength));
  }
  if (n < 3) throw Error(ErrorCode::TooSmall, "sperner check needs a polygon (at least 3 letters)");

  const auto& s = w.letters();
  SpernerReport report;
  report.word = s;
  report.contractible = decide_contractible(w).contractible;
  report.diagonal_examined = for_each_diagonal_triangulation(n, [&](std::span<const Face> faces) {
    const bool free = std::all_of(faces.begin(), faces.end(), [&](const Face& f) {
      return good_colors(s[static_cast<std::size_t>(f[0])], s[static_cast<std::size_t>(f[1])],
                         s[static_cast<std::size_t>(f[2])]);
    });
    if (free) ++report.tricolor_free;
    return true;
  });
  report.biconditional_holds = (report.tricolor_free > 0) == report.contractible;

  std::set<char> alphabet{'A', 'B', 'C', 'D'};
  alphabet.insert(s.begin(), s.end());
  for (char center : alphabet) {
    ++report.star_colorings;
    for (std::size_t i = 0; i < n; ++i) {
      if (!good_colors(s[i], s[(i + 1) % n], center)) {
        ++report.star_colorings_with_tricolor;
        break;
      }
    }
  }

  if (!report.biconditional_holds) {
    throw Error(ErrorCode::TheoremViolation,
                "word (" + s + "): contractible=" + (report.contractible ? "true" : "false") +
                    " but " + std::to_string(report.tricolor_free) + " tricolor-free diagonal triangulations");
  }
  if (!report.contractible && report.star_colorings_with_tricolor != report.star_colorings) {
    throw Error(ErrorCode::TheoremViolation,
                "non-contractible word (" + s + ") has a star triangulation with no tricolor triangle");
  }
  return report;
}

}  // namespace latdiss
