#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "latdiss/gen.hpp"
#include "latdiss/words.hpp"

namespace latdiss::cli {

std::string random_word(std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  std::string s(length, 'A');
  for (auto& c : s) c = static_cast<char>('A' + rng.uniform(0, 3));
  return s;
}

std::vector<BenchRow> bench_decide(const std::vector<std::size_t>& lengths, std::uint64_t seed, int repeats) {
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    BenchRow row;
    row.length = lengths[i];
    if (row.length == 0) {
      rows.push_back(row);
      continue;
    }
    const CyclicWord w(random_word(row.length, seed + i));
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repeats); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = decide_contractible(w);
      const auto stop = std::chrono::steady_clock::now();
      row.contractible = result.contractible;
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    row.seconds = best;
    rows.push_back(row);
  }
  return rows;
}

LinearFit fit_linear(const std::vector<BenchRow>& rows) {
  LinearFit fit;
  const double n = static_cast<double>(rows.size());
  if (rows.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& r : rows) {
    const double x = static_cast<double>(r.length), y = r.seconds;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (const auto& r : rows) {
    const double e = r.seconds - (fit.intercept + fit.slope * static_cast<double>(r.length));
    ss_res += e * e;
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace latdiss::cli
