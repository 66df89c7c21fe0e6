#pragma once

// Test-only reference implementations. Each one follows the textbook
// definition directly and shares no code with the library routes it checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Order-and-equality isomorphism over every position subset (bitmask).
inline bool contains(const std::vector<int>& word, const std::vector<int>& pattern) {
  const std::size_t len = word.size();
  const std::size_t t = pattern.size();
  if (t > len || len > 24) return false;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != t) continue;
    std::vector<int> picked;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask & (1u << i)) picked.push_back(word[i]);
    }
    bool iso = true;
    for (std::size_t a = 0; a < t && iso; ++a) {
      for (std::size_t b = 0; b < t && iso; ++b) {
        iso = (picked[a] < picked[b]) == (pattern[a] < pattern[b]) &&
              (picked[a] == picked[b]) == (pattern[a] == pattern[b]);
      }
    }
    if (iso) return true;
  }
  return false;
}

struct Span {
  int open;
  int close;
};

/// Arc endpoints (0-based) per label, read straight off the word.
inline std::vector<Span> arcs_of(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size() / 2);
  std::vector<Span> arcs(n + 1, Span{-1, -1});
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    auto& s = arcs[word[i]];
    (s.open < 0 ? s.open : s.close) = i;
  }
  return arcs;
}

inline bool arcs_cross(const std::vector<int>& word) {
  const auto arcs = arcs_of(word);
  for (std::size_t a = 1; a < arcs.size(); ++a) {
    for (std::size_t b = 1; b < arcs.size(); ++b) {
      if (arcs[a].open < arcs[b].open && arcs[b].open < arcs[a].close && arcs[a].close < arcs[b].close) {
        return true;
      }
    }
  }
  return false;
}

inline bool arcs_nest(const std::vector<int>& word) {
  const auto arcs = arcs_of(word);
  for (std::size_t a = 1; a < arcs.size(); ++a) {
    for (std::size_t b = 1; b < arcs.size(); ++b) {
      if (arcs[a].open < arcs[b].open && arcs[b].close < arcs[a].close) return true;
    }
  }
  return false;
}

/// Every arrangement of {1,1,...,n,n}, in lexicographic order.
inline std::vector<std::vector<int>> all_multiset_words(int n) {
  std::vector<int> word;
  for (int v = 1; v <= n; ++v) word.insert(word.end(), {v, v});
  std::vector<std::vector<int>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline std::vector<int> random_word(int n, std::mt19937& rng) {
  std::vector<int> word;
  for (int v = 1; v <= n; ++v) word.insert(word.end(), {v, v});
  std::shuffle(word.begin(), word.end(), rng);
  return word;
}

inline unsigned long long catalan(int n) {
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
