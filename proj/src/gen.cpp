#include "latdiss/gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "latdiss/error.hpp"

namespace latdiss {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

namespace {

LatticePoint primitive(LatticePoint v) {
  const std::int64_t g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  return {v.x / g, v.y / g};
}

LatticePoint color_representative(char c) {
  switch (c) {
    case 'B': return {1, 0};
    case 'C': return {1, 1};
    case 'D': return {0, 1};
    default: return {0, 0};
  }
}

int color_bits(char c) {
  // bit 0: x odd, bit 1: y odd
  switch (c) {
    case 'B': return 1;
    case 'C': return 3;
    case 'D': return 2;
    default: return 0;
  }
}

}  // namespace

ConvexLatticePolygon random_convex_polygon(std::size_t n, std::int64_t coord_bound, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::GenerationFailed, "a polygon needs at least 3 vertices");
  if (coord_bound < 1) throw Error(ErrorCode::GenerationFailed, "coordinate bound must be positive");
  Rng rng(seed);
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t spread = std::max<std::int64_t>(1, 2 * coord_bound / count);
  while ((2 * spread + 1) * (2 * spread + 1) - 1 < 2 * count) ++spread;

  constexpr int kRetries = 20000;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<LatticePoint> edges;
    LatticePoint sum{0, 0};
    bool ok = true;
    std::set<LatticePoint> directions;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) {
      LatticePoint e{rng.uniform(-spread, spread), rng.uniform(-spread, spread)};
      if (e == LatticePoint{0, 0}) {
        ok = false;
        break;
      }
      ok = directions.insert(primitive(e)).second;
      edges.push_back(e);
      sum = {sum.x + e.x, sum.y + e.y};
    }
    if (!ok) continue;
    const LatticePoint last{-sum.x, -sum.y};
    if (last == LatticePoint{0, 0} || !directions.insert(primitive(last)).second) continue;
    edges.push_back(last);
    std::sort(edges.begin(), edges.end(), angle_less);

    std::vector<LatticePoint> vertices;
    LatticePoint at{0, 0};
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& e : edges) {
      vertices.push_back(at);
      min_x = std::min(min_x, at.x);
      max_x = std::max(max_x, at.x);
      min_y = std::min(min_y, at.y);
      max_y = std::max(max_y, at.y);
      at = {at.x + e.x, at.y + e.y};
    }
    if (max_x - min_x > 2 * coord_bound || max_y - min_y > 2 * coord_bound) continue;
    const std::int64_t ox = rng.uniform(-coord_bound - min_x, coord_bound - max_x);
    const std::int64_t oy = rng.uniform(-coord_bound - min_y, coord_bound - max_y);
    for (auto& v : vertices) v = {v.x + ox, v.y + oy};
    try {
      return validate_convex(std::move(vertices));
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::GenerationFailed, "no convex " + std::to_string(n) + "-gon found within bound " +
                                               std::to_string(coord_bound));
}

namespace {

class WordRealizer {
 public:
  WordRealizer(const std::string& word, std::int64_t k, std::int64_t coord_bound, std::uint64_t& budget)
      : word_(word), n_(word.size()), k_(k), bound_(coord_bound), budget_(budget) {
    for (std::int64_t dx = -k; dx <= k; ++dx) {
      for (std::int64_t dy = -k; dy <= k; ++dy) {
        if (dx != 0 || dy != 0) candidates_.push_back({dx, dy});
      }
    }
    std::stable_sort(candidates_.begin(), candidates_.end(), angle_less);
    rank_.resize(candidates_.size());
    for (std::size_t i = 1; i < candidates_.size(); ++i) {
      rank_[i] = rank_[i - 1] + (angle_less(candidates_[i - 1], candidates_[i]) ? 1 : 0);
    }
  }

  // Edge vectors for the word starting at its first letter, or empty.
  std::vector<LatticePoint> search() {
    start_ = color_representative(word_[0]);
    chosen_.clear();
    failed_.clear();
    if (dfs(0, -1, 0, 0)) return chosen_;
    return {};
  }

  bool exhausted() const { return budget_ == 0; }

 private:
  bool dfs(std::size_t i, int last_rank, std::int64_t sx, std::int64_t sy) {
    if (i == n_) return sx == 0 && sy == 0;
    if (budget_ == 0) return false;
    --budget_;
    const auto remaining = static_cast<std::int64_t>(n_ - i);
    if (std::abs(sx) > remaining * k_ || std::abs(sy) > remaining * k_) return false;
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 48) ^
                              (static_cast<std::uint64_t>(last_rank + 1) << 32) ^
                              (static_cast<std::uint64_t>(sx + 32768) << 16) ^ static_cast<std::uint64_t>(sy + 32768);
    if (failed_.count(key)) return false;

    const int need = color_bits(word_[i]) ^ color_bits(word_[(i + 1) % n_]);
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (rank_[c] <= last_rank) continue;
      const auto& e = candidates_[c];
      if ((static_cast<int>(e.x & 1) | (static_cast<int>(e.y & 1) << 1)) != need) continue;
      const std::int64_t nx = sx + e.x, ny = sy + e.y;
      if (std::abs(start_.x + nx) > bound_ || std::abs(start_.y + ny) > bound_) continue;
      chosen_.push_back(e);
      if (dfs(i + 1, rank_[c], nx, ny)) return true;
      chosen_.pop_back();
      if (budget_ == 0) return false;
    }
    failed_.insert(key);
    return false;
  }

  const std::string& word_;
  std::size_t n_;
  std::int64_t k_;
  std::int64_t bound_;
  std::uint64_t& budget_;
  std::vector<LatticePoint> candidates_;
  std::vector<int> rank_;
  LatticePoint start_{};
  std::vector<LatticePoint> chosen_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

std::optional<ConvexLatticePolygon> realize_word(const CyclicWord& w, const RealizeOptions& options) {
  const std::size_t n = w.size();
  if (n < 3) return std::nullopt;
  for (char c : w.letters()) {
    if (c > 'D') return std::nullopt;  // only parity colors are realizable
  }
  std::uint64_t budget = options.node_budget;
  for (std::int64_t k = 1; k <= options.max_edge_component; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::string rotated = w.rotated(r).letters();
      WordRealizer realizer(rotated, k, options.coord_bound, budget);
      const auto edges = realizer.search();
      if (!edges.empty()) {
        std::vector<LatticePoint> vertices;
        LatticePoint at = color_representative(rotated[0]);
        for (const auto& e : edges) {
          vertices.push_back(at);
          at = {at.x + e.x, at.y + e.y};
        }
        auto polygon = validate_convex(std::move(vertices));
        if (boundary_word(polygon) == w) return polygon;
      }
      if (realizer.exhausted()) return std::nullopt;
    }
  }
  return std::nullopt;
}

Dissection random_dissection(const ConvexLatticePolygon& polygon, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  Dissection d;
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) d.triangles.push_back({polygon[0], polygon[i], polygon[i + 1]});

  constexpr int kTries = 64;
  for (std::size_t step = 0; step < depth; ++step) {
    for (int attempt = 0; attempt < kTries; ++attempt) {
      const std::size_t index = rng.index(d.triangles.size());
      const LatticeTriangle t = d.triangles[index];
      const auto [lo_x, hi_x] = std::minmax({t.v0.x, t.v1.x, t.v2.x});
      const auto [lo_y, hi_y] = std::minmax({t.v0.y, t.v1.y, t.v2.y});
      std::vector<LatticePoint> candidates;
      for (std::int64_t x = lo_x; x <= hi_x; ++x) {
        for (std::int64_t y = lo_y; y <= hi_y; ++y) {
          const LatticePoint p{x, y};
          if (p == t.v0 || p == t.v1 || p == t.v2) continue;
          if (signed_area2(t.v0, t.v1, p) >= 0 && signed_area2(t.v1, t.v2, p) >= 0 &&
              signed_area2(t.v2, t.v0, p) >= 0) {
            candidates.push_back(p);
          }
        }
      }
      if (candidates.empty()) continue;
      auto pieces = split_with_point(t, candidates[rng.index(candidates.size())]);
      d.triangles[index] = pieces[0];
      d.triangles.insert(d.triangles.end(), pieces.begin() + 1, pieces.end());
      break;
    }
  }
  return d;
}

LatticeTriangle random_triangle(Rng& rng, std::int64_t coord_bound, bool even_area) {
  for (;;) {
    LatticeTriangle t;
    for (auto* v : {&t.v0, &t.v1, &t.v2}) {
      *v = {rng.uniform(-coord_bound, coord_bound), rng.uniform(-coord_bound, coord_bound)};
    }
    const std::int64_t a = signed_area2(t);
    if (a != 0 && (!even_area || a % 2 == 0)) return t;
  }
}

}  // namespace latdiss
