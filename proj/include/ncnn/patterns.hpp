#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncnn/core.hpp"

namespace ncnn {

/// A pattern word over {1..m}, letters possibly repeated (231, 122, 1212).
/// The letter set must be exactly {1..m}.
class Pattern {
 public:
  static Pattern from_letters(std::vector<int> letters);
  /// Digit-string form, e.g. "231".
  static Pattern parse(std::string_view text);

  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int alphabet_size() const { return alphabet_size_; }
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  Pattern(std::vector<int> letters, int alphabet_size)
      : letters_(std::move(letters)), alphabet_size_(alphabet_size) {}
  std::vector<int> letters_;
  int alphabet_size_ = 0;
};

using PatternSet = std::vector<Pattern>;

/// Occurrence test: some subsequence of `word` is order- and
/// equality-isomorphic to `pattern`. Dispatches to the length-3 scan when
/// possible.
bool contains(std::span<const int> word, const Pattern& pattern);
bool contains(const Word& word, const Pattern& pattern);

/// Backtracking over increasing position tuples; works for any length.
bool contains_exhaustive(std::span<const int> word, const Pattern& pattern);

/// O(L^2 + L*max) scan for length-3 patterns using suffix value counts.
/// Precondition: pattern.length() == 3 and all labels are positive.
bool contains_length3(std::span<const int> word, const Pattern& pattern);

bool avoids_all(std::span<const int> word, std::span<const Pattern> patterns);
bool avoids_all(const Word& word, std::span<const Pattern> patterns);

const PatternSet& crossing_patterns();  // {1212, 2121}
const PatternSet& nesting_patterns();   // {1221, 2112}

bool is_non_crossing(const Word& word);
bool is_non_nesting(const Word& word);
/// Avoids 212.
bool is_stirling(const Word& word);

}  // namespace ncnn
