#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncnn/bignum.hpp"
#include "ncnn/core.hpp"
#include "ncnn/patterns.hpp"

namespace ncnn {

/// Positional restriction on counted words.
enum class Constraint { None, FirstIsOne, LastIsN, FirstIsOneAndLastIsN };

struct CountQuery {
  std::size_t semilength = 0;
  Family family = Family::NonNesting;
  PatternSet forbidden;
  Constraint constraint = Constraint::None;
};

inline constexpr std::size_t kDefaultEnumerationCap = 7;

struct CountOptions {
  std::size_t cap = kDefaultEnumerationCap;
  /// Dyck words are split into this many contiguous ranges, one thread each.
  std::size_t workers = 1;
};

/// Dyck words of a fixed semilength in lexicographic order (Open < Close).
class DyckWordStream {
 public:
  explicit DyckWordStream(std::size_t semilength);
  std::optional<DyckWord> next();

 private:
  std::size_t n_;
  std::vector<Step> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Every word of the family at semilength n, exactly once: Dyck words in
/// lexicographic order, each followed by its n! labelings in lexicographic
/// order of the opener-ordered label sequence.
class LabeledWordStream {
 public:
  LabeledWordStream(std::size_t semilength, Family family);
  std::optional<Word> next();

 private:
  std::size_t n_;
  Pairing pairing_;
  DyckWordStream shapes_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<int> labeling_;
  bool have_shape_ = false;
};

std::vector<DyckWord> dyck_words(std::size_t semilength);
std::vector<Word> labeled_words(std::size_t semilength, Family family);

bool satisfies(std::span<const int> word, Constraint constraint);

/// Brute-force count. Throws ResourceLimitError when the semilength exceeds
/// options.cap.
BigInt count_avoiders(const CountQuery& query, const CountOptions& options = {});

/// All labelings (opener order) of the given shape whose word avoids every
/// pattern.
std::vector<std::vector<int>> avoiding_labelings(const DyckWord& shape, Pairing pairing,
                                                 std::span<const Pattern> patterns);

/// n, n-1, ..., 1.
std::vector<int> decreasing_labeling(std::size_t semilength);

}  // namespace ncnn
