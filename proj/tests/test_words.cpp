#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "latdiss/words.hpp"
#include "support.hpp"

using namespace latdiss;
using testing::error_of;
using testing::for_each_word;
using testing::word;

namespace {

std::string brute_least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t k = 1; k < s.size(); ++k) best = std::min(best, s.substr(k) + s.substr(0, k));
  return best;
}

std::string random_letters(std::mt19937_64& gen, std::size_t n, int k) {
  std::string s(n, 'A');
  for (auto& c : s) c = static_cast<char>('A' + gen() % static_cast<unsigned>(k));
  return s;
}

}  // namespace

TEST_CASE("CyclicWord construction and rotation equality") {
  CHECK(error_of([] { CyclicWord(""); }) == ErrorCode::InvalidLetter);
  CHECK(error_of([] { CyclicWord("ABc"); }) == ErrorCode::InvalidLetter);
  CHECK(error_of([] { CyclicWord("AB1"); }) == ErrorCode::InvalidLetter);
  CHECK(word("BCA") == word("ABC"));
  CHECK_FALSE(word("ACB") == word("ABC"));
  CHECK(word("ABCD")[5] == 'B');
  CHECK(word("ABCD").rotated(1).letters() == "BCDA");
  CHECK(word("CAB").canonical() == "ABC");
}

TEST_CASE("least_rotation agrees with brute force") {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 5000; ++it) {
    const auto s = random_letters(gen, 1 + gen() % 14, 1 + static_cast<int>(gen() % 3));
    REQUIRE(least_rotation(s) == brute_least_rotation(s));
  }
}

TEST_CASE("contracting_positions") {
  CHECK(contracting_positions(word("ABCD")).empty());
  CHECK(contracting_positions(word("ABAC")) == std::vector<std::size_t>{1, 3});
  CHECK(contracting_positions(word("XX")) == std::vector<std::size_t>{0, 1});
  CHECK(contracting_positions(word("XY")) == std::vector<std::size_t>{0, 1});
  CHECK(contracting_positions(word("AAB")) == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_contracting_position(word("ABAC"), 1));
  CHECK_FALSE(is_contracting_position(word("ABAC"), 0));
  CHECK(error_of([] { contracting_positions(word("A")); }) == ErrorCode::WordTooShort);
}

TEST_CASE("apply_step") {
  CHECK(apply_step(word("ABAC"), 1).letters() == "AAC");
  CHECK(apply_step(word("AAC"), 0).letters() == "AC");
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(error_of([&] { apply_step(word("ABCD"), i); }) == ErrorCode::IllegalStep);
  }
}

TEST_CASE("decide_contractible on known words") {
  CHECK(decide_contractible(word("ABABCCDCBBDB")).contractible);
  CHECK_FALSE(decide_contractible(word("ABCDACBADC")).contractible);
  CHECK_FALSE(decide_contractible(word("ABCABC")).contractible);
  CHECK_FALSE(decide_contractible(word("ABCD")).contractible);
  CHECK(decide_contractible(word("A")).contractible);
  CHECK(decide_contractible(word("AB")).contractible);
  CHECK(decide_contractible(word("ABA")).contractible);
  CHECK_FALSE(decide_contractible(word("ABC")).contractible);

  const auto r = decide_contractible(word("ABCDACBADC"));
  REQUIRE(r.stuck.has_value());
  CHECK(*r.stuck == word("ABCDACBADC"));
  CHECK(r.trace.steps.empty());
}

TEST_CASE("stuck words are cyclically reduced") {
  const auto r = decide_contractible(word("AABCDDACBBADCC"));
  REQUIRE_FALSE(r.contractible);
  REQUIRE(r.stuck.has_value());
  CHECK(*r.stuck == word("ABCDACBADC"));
  CHECK(contracting_positions(*r.stuck).empty());
}

TEST_CASE("exhaustive and free-reduction oracles") {
  CHECK_FALSE(exhaustive_contractible(word("ABCD")));
  CHECK(exhaustive_contractible(word("ABAC")));
  CHECK_FALSE(exhaustive_contractible(word("ABCDACBADC")));
  CHECK(error_of([] { exhaustive_contractible(word("ABABABABABABA")); }) == ErrorCode::BoundExceeded);
  CHECK(exhaustive_contractible(word("ABABABABABABA"), 13));

  CHECK_FALSE(free_reduction_contractible(word("ABCABC")));
  CHECK(free_reduction_contractible(word("ABBA")));
  CHECK_FALSE(free_reduction_contractible(word("ABCDACBADC")));
  CHECK(free_reduction_contractible(word("ABABCCDCBBDB")));
  CHECK(free_reduction_contractible(word("AAAA")));
}

TEST_CASE("all three deciders agree on every 4-letter word up to length 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_word(n, 4, [](const std::string& s) {
      const CyclicWord w(s);
      const bool truth = exhaustive_contractible(w);
      REQUIRE(decide_contractible(w).contractible == truth);
      REQUIRE(free_reduction_contractible(w) == truth);
    });
  }
}

TEST_CASE("stack decider agrees with free reduction on long random words") {
  std::mt19937_64 gen(5);
  for (int it = 0; it < 3000; ++it) {
    const int k = 2 + static_cast<int>(gen() % 5);
    const auto s = random_letters(gen, 1 + gen() % 60, k);
    REQUIRE(decide_contractible(CyclicWord(s)).contractible == free_reduction_contractible(CyclicWord(s)));
  }
}

TEST_CASE("contractible words built by inserting backtracks") {
  std::mt19937_64 gen(17);
  for (int it = 0; it < 500; ++it) {
    // Grow a null-homotopic loop by inserting X,Y,X or X,X patterns.
    std::string s = "A";
    for (int k = 0; k < 20; ++k) {
      const std::size_t at = gen() % s.size();
      const char x = s[at], y = static_cast<char>('A' + gen() % 6);
      s.insert(at + 1, std::string{y, x});
    }
    REQUIRE(decide_contractible(CyclicWord(s)).contractible);
  }
}

TEST_CASE("verdict is invariant under rotation") {
  std::mt19937_64 gen(23);
  for (int it = 0; it < 300; ++it) {
    const CyclicWord w(random_letters(gen, 3 + gen() % 20, 4));
    const bool v = decide_contractible(w).contractible;
    for (std::size_t k = 0; k < w.size(); ++k) REQUIRE(decide_contractible(w.rotated(k)).contractible == v);
  }
}

TEST_CASE("traces replay legally and have n - 2 steps when contractible") {
  std::mt19937_64 gen(29);
  for (int it = 0; it < 3000; ++it) {
    const CyclicWord w(random_letters(gen, 2 + gen() % 30, 2 + static_cast<int>(gen() % 3)));
    const auto r = decide_contractible(w);
    REQUIRE(replays_legally(w, r.trace));
    if (r.contractible) {
      CHECK(r.trace.steps.size() == w.size() - 2);
      CHECK(r.trace.terminal.size() == 2);
    } else {
      REQUIRE(r.stuck.has_value());
      CHECK(r.trace.terminal.size() == r.stuck->size());
      std::string left;
      for (auto i : r.trace.terminal) left.push_back(w[i]);
      CHECK(CyclicWord(left) == *r.stuck);
    }
  }
}

TEST_CASE("replays_legally rejects tampered traces") {
  const auto w = word("ABAC");
  auto r = decide_contractible(w);
  REQUIRE(r.contractible);
  REQUIRE(replays_legally(w, r.trace));
  auto bad = r.trace;
  bad.steps.front().left = (bad.steps.front().left + 1) % 4;
  CHECK_FALSE(replays_legally(w, bad));

  ContractionTrace illegal;
  illegal.steps.push_back({0, 3, 1});
  illegal.terminal = {1, 2, 3};
  CHECK_FALSE(replays_legally(w, illegal));
}

TEST_CASE("contracting steps preserve contractibility (words up to length 8)") {
  std::set<std::string> seen;
  for (std::size_t n = 2; n <= 8; ++n) {
    for_each_word(n, 4, [&](const std::string& s) {
      const CyclicWord w(s);
      if (!seen.insert(w.canonical()).second) return;
      const bool before = exhaustive_contractible(w);
      for (auto i : contracting_positions(w)) {
        REQUIRE(exhaustive_contractible(apply_step(w, i)) == before);
      }
    });
  }
}
