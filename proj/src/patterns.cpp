#include "ncnn/patterns.hpp"

#include <algorithm>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

int compare(int a, int b) { return (a > b) - (a < b); }

bool search(std::span<const int> word, std::span<const int> letters, std::vector<int>& chosen,
            std::size_t from) {
  const std::size_t depth = chosen.size();
  if (depth == letters.size()) return true;
  const std::size_t remaining = letters.size() - depth;
  for (std::size_t pos = from; pos + remaining <= word.size(); ++pos) {
    const int candidate = word[pos];
    bool consistent = true;
    for (std::size_t a = 0; a < depth && consistent; ++a) {
      consistent = compare(chosen[a], candidate) == compare(letters[a], letters[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(candidate);
    if (search(word, letters, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Pattern Pattern::from_letters(std::vector<int> letters) {
  if (letters.empty()) throw ValidationError("pattern must have at least one letter");
  const int m = *std::max_element(letters.begin(), letters.end());
  std::vector<bool> present(static_cast<std::size_t>(std::max(m, 0)) + 1, false);
  for (int v : letters) {
    if (v < 1) throw ValidationError("pattern letters must be positive");
    present[v] = true;
  }
  for (int v = 1; v <= m; ++v) {
    if (!present[v]) {
      throw ValidationError("pattern letter set must be {1..m}; missing " + std::to_string(v));
    }
  }
  return Pattern(std::move(letters), m);
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<int> letters;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw ValidationError("pattern '" + std::string(text) + "' must be a digit string");
    }
    letters.push_back(c - '0');
  }
  return from_letters(std::move(letters));
}

std::string Pattern::to_string() const {
  std::string out;
  for (int v : letters_) out += std::to_string(v);
  return out;
}

bool contains_exhaustive(std::span<const int> word, const Pattern& pattern) {
  std::vector<int> chosen;
  chosen.reserve(pattern.length());
  return search(word, pattern.letters(), chosen, 0);
}

bool contains_length3(std::span<const int> word, const Pattern& pattern) {
  const auto p = pattern.letters();
  const std::size_t len = word.size();
  if (len < 3) return false;
  const int max_label = *std::max_element(word.begin(), word.end());
  const std::size_t width = static_cast<std::size_t>(max_label) + 1;

  // at_most[j * width + v] = #{k > j : word[k] <= v}
  std::vector<int> at_most(len * width, 0);
  for (std::size_t j = len - 1; j-- > 0;) {
    const int next = word[j + 1];
    for (std::size_t v = 0; v < width; ++v) {
      at_most[j * width + v] = at_most[(j + 1) * width + v] + (static_cast<int>(v) >= next ? 1 : 0);
    }
  }
  auto count_in = [&](std::size_t j, int lo, int hi) {
    if (lo < 1) lo = 1;
    if (hi > max_label) hi = max_label;
    if (lo > hi) return 0;
    return at_most[j * width + hi] - at_most[j * width + lo - 1];
  };
  // Values v allowed by compare(v, anchor) == relation, intersected with [lo, hi].
  auto restrict = [](int anchor, int relation, int& lo, int& hi) {
    if (relation < 0) hi = std::min(hi, anchor - 1);
    if (relation == 0) lo = std::max(lo, anchor), hi = std::min(hi, anchor);
    if (relation > 0) lo = std::max(lo, anchor + 1);
  };

  const int rel_first_second = compare(p[0], p[1]);
  const int rel_third_first = compare(p[2], p[0]);
  const int rel_third_second = compare(p[2], p[1]);
  for (std::size_t i = 0; i + 2 < len; ++i) {
    for (std::size_t j = i + 1; j + 1 < len; ++j) {
      if (compare(word[i], word[j]) != rel_first_second) continue;
      int lo = 1;
      int hi = max_label;
      restrict(word[i], rel_third_first, lo, hi);
      restrict(word[j], rel_third_second, lo, hi);
      if (count_in(j, lo, hi) > 0) return true;
    }
  }
  return false;
}

bool contains(std::span<const int> word, const Pattern& pattern) {
  if (pattern.length() > word.size()) return false;
  if (pattern.length() == 3) return contains_length3(word, pattern);
  return contains_exhaustive(word, pattern);
}

bool contains(const Word& word, const Pattern& pattern) { return contains(word.entries(), pattern); }

bool avoids_all(std::span<const int> word, std::span<const Pattern> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains(word, p); });
}

bool avoids_all(const Word& word, std::span<const Pattern> patterns) {
  return avoids_all(word.entries(), patterns);
}

const PatternSet& crossing_patterns() {
  static const PatternSet set{Pattern::parse("1212"), Pattern::parse("2121")};
  return set;
}

const PatternSet& nesting_patterns() {
  static const PatternSet set{Pattern::parse("1221"), Pattern::parse("2112")};
  return set;
}

bool is_non_crossing(const Word& word) { return avoids_all(word, crossing_patterns()); }

bool is_non_nesting(const Word& word) { return avoids_all(word, nesting_patterns()); }

bool is_stirling(const Word& word) {
  static const Pattern stirling = Pattern::parse("212");
  return !contains(word, stirling);
}

}  // namespace ncnn
