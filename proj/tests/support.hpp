#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "latdiss/dissect.hpp"
#include "latdiss/error.hpp"
#include "latdiss/geometry.hpp"
#include "latdiss/words.hpp"

namespace testing {

inline latdiss::ConvexLatticePolygon polygon(std::initializer_list<latdiss::LatticePoint> pts) {
  return latdiss::validate_convex(std::vector<latdiss::LatticePoint>(pts));
}

inline latdiss::CyclicWord word(const char* s) { return latdiss::CyclicWord(s); }

// Runs f and returns the error code it throws; fails the test if it returns.
template <typename F>
latdiss::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const latdiss::Error& e) {
    return e.code();
  }
  FAIL("expected latdiss::Error");
  return latdiss::ErrorCode::ParseError;
}

// All words of the given length over the first k letters, as strings.
template <typename F>
void for_each_word(std::size_t length, int k, F&& f) {
  std::string s(length, 'A');
  while (true) {
    f(s);
    std::size_t i = 0;
    while (i < length && s[i] == 'A' + k - 1) s[i++] = 'A';
    if (i == length) return;
    ++s[i];
  }
}

}  // namespace testing
