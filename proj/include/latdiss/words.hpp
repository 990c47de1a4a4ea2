#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latdiss {

// A finite word over color labels 'A'..'Z', considered up to rotation.
// Indices are taken modulo the length.
class CyclicWord {
 public:
  // Throws InvalidLetter for characters outside 'A'..'Z' or an empty word.
  explicit CyclicWord(std::string letters);

  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i % letters_.size()]; }
  const std::string& letters() const { return letters_; }

  // Lexicographically least rotation.
  std::string canonical() const;
  CyclicWord rotated(std::size_t k) const;

  // Equality up to rotation.
  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.size() == b.size() && a.canonical() == b.canonical();
  }

 private:
  std::string letters_;
};

// Least rotation of a nonempty string (Booth's algorithm).
std::string least_rotation(std::string_view s);

// Positions i at which X[i-1], X[i], X[i+1] are not pairwise distinct.
// Throws WordTooShort if the word has fewer than 2 letters.
std::vector<std::size_t> contracting_positions(const CyclicWord& w);
bool is_contracting_position(const CyclicWord& w, std::size_t i);

// Deletes letter i. Throws IllegalStep if i is not a contracting position.
CyclicWord apply_step(const CyclicWord& w, std::size_t i);

// One recorded deletion; all indices refer to positions in the original word.
struct ContractionStep {
  std::size_t deleted;
  std::size_t left;
  std::size_t right;

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct ContractionTrace {
  std::vector<ContractionStep> steps;
  std::vector<std::size_t> terminal;  // surviving original indices, in cyclic order
};

struct ContractionResult {
  bool contractible = false;
  // Deletions performed, in order. For a contractible word the trace reduces it
  // to at most two letters; otherwise it reduces it to `stuck`.
  ContractionTrace trace;
  // Cyclically reduced word left over when not contractible.
  std::optional<CyclicWord> stuck;
};

// Linear-time stack decider. Never deletes below two letters, so a contractible
// word of length n >= 2 yields exactly n - 2 steps.
ContractionResult decide_contractible(const CyclicWord& w);

// Checks that `trace` is a legal deletion sequence for `w`: every recorded
// neighbor matches the current word and every step is a contracting step.
bool replays_legally(const CyclicWord& w, const ContractionTrace& trace);

inline constexpr std::size_t kDefaultExhaustiveBound = 12;

// Depth-first search over every order of contracting steps. Independent of the
// stack decider. Throws BoundExceeded if |w| > bound.
bool exhaustive_contractible(const CyclicWord& w, std::size_t bound = kDefaultExhaustiveBound);

// Treats consecutive distinct letters as directed edges of the complete graph
// on the alphabet and decides whether the resulting closed walk reduces to the
// empty walk by cancelling backtracks.
bool free_reduction_contractible(const CyclicWord& w);

}  // namespace latdiss
