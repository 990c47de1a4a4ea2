#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace latdiss::cli {

struct BenchRow {
  std::size_t length = 0;
  double seconds = 0;  // best of the repeats
  bool contractible = false;
};

// Random words over A-D, one per length, each decided `repeats` times.
std::vector<BenchRow> bench_decide(const std::vector<std::size_t>& lengths, std::uint64_t seed, int repeats);

struct LinearFit {
  double slope = 0;      // seconds per letter
  double intercept = 0;  // seconds
  double r2 = 0;
};

// Least squares fit of seconds against length; needs at least two rows.
LinearFit fit_linear(const std::vector<BenchRow>& rows);

std::string random_word(std::size_t length, std::uint64_t seed);

}  // namespace latdiss::cli
