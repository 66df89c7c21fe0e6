#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncnn {

/// A permutation of the multiset {1,1,2,2,...,n,n}.
///
/// Every label in 1..n occurs exactly twice. Positions in the public
/// interface are 1-based; the empty word (n = 0) is valid.
class Word {
 public:
  Word() = default;

  /// Validates and wraps raw entries. Throws ValidationError.
  static Word from_entries(std::vector<int> entries);

  std::size_t semilength() const { return entries_.size() / 2; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Label at 1-based position.
  int at(std::size_t position) const;

  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<int> entries) : entries_(std::move(entries)) {}
  std::vector<int> entries_;
};

/// Checks the Word invariants without constructing one.
bool is_valid_word(std::span<const int> entries);

struct Arc {
  std::size_t opener = 0;
  std::size_t closer = 0;
  int label = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A labeled perfect matching of [2n]. Arcs are kept sorted by opener.
class Matching {
 public:
  Matching() = default;

  /// Validates endpoints and labels; arcs may be given in any order.
  static Matching from_arcs(std::vector<Arc> arcs);

  std::size_t semilength() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}
  std::vector<Arc> arcs_;
};

enum class Step : unsigned char { Open, Close };

class DyckWord {
 public:
  DyckWord() = default;

  static DyckWord from_steps(std::vector<Step> steps);
  /// Parses "(())()" style text.
  static DyckWord parse(std::string_view text);

  std::size_t semilength() const { return steps_.size() / 2; }
  std::span<const Step> steps() const { return steps_; }
  std::string to_string() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  explicit DyckWord(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

/// How a CLOSE step picks its partner. Stack pairs with the most recent
/// unmatched OPEN (non-crossing result); Queue pairs with the earliest
/// (non-nesting result).
enum class Pairing { Stack, Queue };

/// The two word families: non-crossing (avoid 1212, 2121) and non-nesting
/// (avoid 1221, 2112).
enum class Family { NonCrossing, NonNesting };

inline Pairing pairing_for(Family family) {
  return family == Family::NonCrossing ? Pairing::Stack : Pairing::Queue;
}

const char* family_name(Family family);

Matching word_to_matching(const Word& word);
Word matching_to_word(const Matching& matching);

/// Pairs the steps of `dyck` under `pairing`; the k-th arc in opener order
/// receives labeling[k]. `labeling` must be a permutation of 1..n.
Matching dyck_to_matching(const DyckWord& dyck, Pairing pairing, std::span<const int> labeling);

/// Unlabeled arc endpoints (0-based opener, closer) in opener order.
/// Shared by the enumerators, which relabel the same shape n! times.
std::vector<std::pair<std::size_t, std::size_t>> pair_steps(const DyckWord& dyck, Pairing pairing);

/// Accepts "1,2,2,1" or, when every label is a single digit, "1221".
Word parse_word(std::string_view text);
/// Always the comma form.
std::string format_word(const Word& word);

}  // namespace ncnn
