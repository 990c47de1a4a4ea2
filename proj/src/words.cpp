#include "latdiss/words.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

#include "latdiss/error.hpp"

namespace latdiss {

namespace {

bool all_distinct(char a, char b, char c) { return a != b && b != c && a != c; }

}  // namespace

CyclicWord::CyclicWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorCode::InvalidLetter, "empty word");
  for (char c : letters_) {
    if (c < 'A' || c > 'Z') {
      throw Error(ErrorCode::InvalidLetter, std::string("letter '") + c + "' is not in A-Z");
    }
  }
}

std::string least_rotation(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  // Booth: failure function over the doubled string.
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const char sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s[(k + i) % n]);
  return out;
}

std::string CyclicWord::canonical() const { return least_rotation(letters_); }

CyclicWord CyclicWord::rotated(std::size_t k) const {
  k %= letters_.size();
  return CyclicWord(letters_.substr(k) + letters_.substr(0, k));
}

bool is_contracting_position(const CyclicWord& w, std::size_t i) {
  const std::size_t n = w.size();
  if (n < 2) throw Error(ErrorCode::WordTooShort, "contracting steps need at least 2 letters");
  if (i >= n) return false;
  return !all_distinct(w[i + n - 1], w[i], w[i + 1]);
}

std::vector<std::size_t> contracting_positions(const CyclicWord& w) {
  if (w.size() < 2) throw Error(ErrorCode::WordTooShort, "contracting steps need at least 2 letters");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_contracting_position(w, i)) out.push_back(i);
  }
  return out;
}

CyclicWord apply_step(const CyclicWord& w, std::size_t i) {
  if (w.size() < 2 || !is_contracting_position(w, i)) {
    throw Error(ErrorCode::IllegalStep,
                "position " + std::to_string(i) + " of (" + w.letters() + ") is not a contracting step");
  }
  std::string s = w.letters();
  s.erase(i, 1);
  return CyclicWord(std::move(s));
}

ContractionResult decide_contractible(const CyclicWord& w) {
  const std::string& L = w.letters();
  const std::size_t n = L.size();
  ContractionResult result;
  auto& steps = result.trace.steps;
  steps.reserve(n);

  // Linear pass. The stack never holds two adjacent equal letters or a window
  // X,Y,X, so every stack-internal window is pairwise distinct.
  std::vector<std::size_t> st;
  st.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    st.push_back(j);
    const std::size_t remaining = n - 1 - j;
    while (st.size() + remaining >= 3) {
      const std::size_t k = st.size();
      if (k >= 2 && L[st[k - 1]] == L[st[k - 2]]) {
        const std::size_t right = remaining > 0 ? j + 1 : st[0];
        steps.push_back({st[k - 1], st[k - 2], right});
        st.pop_back();
        continue;
      }
      if (k >= 3 && L[st[k - 1]] == L[st[k - 3]]) {
        steps.push_back({st[k - 2], st[k - 3], st[k - 1]});
        st[k - 2] = st[k - 1];
        st.pop_back();
        continue;
      }
      break;
    }
  }

  // Seam pass: only the two windows straddling the wrap-around can still be
  // reducible, and each deletion only changes those two windows.
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 3) {
    {
      const std::size_t a = st[hi - 2], b = st[hi - 1], c = st[lo];
      if (!all_distinct(L[a], L[b], L[c])) {
        steps.push_back({b, a, c});
        --hi;
        continue;
      }
    }
    {
      const std::size_t a = st[hi - 1], b = st[lo], c = st[lo + 1];
      if (!all_distinct(L[a], L[b], L[c])) {
        steps.push_back({b, a, c});
        ++lo;
        continue;
      }
    }
    break;
  }

  result.trace.terminal.assign(st.begin() + static_cast<long>(lo), st.begin() + static_cast<long>(hi));
  result.contractible = hi - lo <= 2;
  if (!result.contractible) {
    std::string rest;
    rest.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) rest.push_back(L[st[i]]);
    result.stuck = CyclicWord(std::move(rest));
  }
  return result;
}

bool replays_legally(const CyclicWord& w, const ContractionTrace& trace) {
  const std::size_t n = w.size();
  std::vector<std::size_t> prev(n), next(n);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
  }
  std::size_t length = n;
  for (const auto& s : trace.steps) {
    if (s.deleted >= n || !alive[s.deleted] || length < 2) return false;
    if (prev[s.deleted] != s.left || next[s.deleted] != s.right) return false;
    if (all_distinct(w[s.left], w[s.deleted], w[s.right])) return false;
    next[s.left] = s.right;
    prev[s.right] = s.left;
    alive[s.deleted] = false;
    --length;
  }
  if (trace.terminal.size() != length) return false;
  if (length == 0) return true;
  // Terminal must list the survivors in cyclic order.
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t a = trace.terminal[i];
    if (a >= n || !alive[a] || next[a] != trace.terminal[(i + 1) % length]) return false;
  }
  return true;
}

bool exhaustive_contractible(const CyclicWord& w, std::size_t bound) {
  if (w.size() > bound) {
    throw Error(ErrorCode::BoundExceeded, "exhaustive search limited to words of length " +
                                              std::to_string(bound) + ", got " +
                                              std::to_string(w.size()));
  }
  std::unordered_map<std::string, bool> memo;
  std::function<bool(const std::string&)> search = [&](const std::string& s) -> bool {
    const std::size_t n = s.size();
    if (n <= 2) return true;
    std::string key = least_rotation(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (all_distinct(s[(i + n - 1) % n], s[i], s[(i + 1) % n])) continue;
      std::string t = s;
      t.erase(i, 1);
      found = search(t);
    }
    memo.emplace(std::move(key), found);
    return found;
  };
  return search(w.letters());
}

bool free_reduction_contractible(const CyclicWord& w) {
  const std::size_t n = w.size();
  std::vector<std::pair<char, char>> st;
  st.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char u = w[i], v = w[i + 1];
    if (u == v) continue;
    if (!st.empty() && st.back().first == v && st.back().second == u) {
      st.pop_back();
    } else {
      st.emplace_back(u, v);
    }
  }
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && st[lo].first == st[hi - 1].second && st[lo].second == st[hi - 1].first) {
    ++lo;
    --hi;
  }
  return lo == hi;
}

}  // namespace latdiss
