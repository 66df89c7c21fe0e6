#include "ncnn/core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

bool is_permutation_of_one_to_n(std::span<const int> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

const char* family_name(Family family) {
  return family == Family::NonCrossing ? "non-crossing" : "non-nesting";
}

bool is_valid_word(std::span<const int> entries) {
  if (entries.size() % 2 != 0) return false;
  const std::size_t n = entries.size() / 2;
  std::vector<int> count(n + 1, 0);
  for (int v : entries) {
    if (v < 1 || static_cast<std::size_t>(v) > n) return false;
    if (++count[v] > 2) return false;
  }
  return true;
}

Word Word::from_entries(std::vector<int> entries) {
  if (!is_valid_word(entries)) {
    throw ValidationError("word must contain each label 1..n exactly twice");
  }
  return Word(std::move(entries));
}

int Word::at(std::size_t position) const {
  if (position < 1 || position > entries_.size()) {
    throw ValidationError("word position " + std::to_string(position) + " out of range");
  }
  return entries_[position - 1];
}

Matching Matching::from_arcs(std::vector<Arc> arcs) {
  const std::size_t n = arcs.size();
  std::vector<bool> used(2 * n + 1, false);
  std::vector<int> labels;
  labels.reserve(n);
  for (const Arc& arc : arcs) {
    if (arc.opener < 1 || arc.closer > 2 * n || arc.opener >= arc.closer) {
      throw ValidationError("arc endpoints must satisfy 1 <= opener < closer <= 2n");
    }
    if (used[arc.opener] || used[arc.closer]) {
      throw ValidationError("arc endpoints overlap");
    }
    used[arc.opener] = used[arc.closer] = true;
    labels.push_back(arc.label);
  }
  if (!is_permutation_of_one_to_n(labels)) {
    throw ValidationError("arc labels must be a permutation of 1..n");
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.opener < b.opener; });
  return Matching(std::move(arcs));
}

DyckWord DyckWord::from_steps(std::vector<Step> steps) {
  long depth = 0;
  for (Step s : steps) {
    depth += (s == Step::Open) ? 1 : -1;
    if (depth < 0) throw ValidationError("Dyck word prefix closes more than it opens");
  }
  if (depth != 0) throw ValidationError("Dyck word is unbalanced");
  return DyckWord(std::move(steps));
}

DyckWord DyckWord::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == '(') {
      steps.push_back(Step::Open);
    } else if (c == ')') {
      steps.push_back(Step::Close);
    } else {
      throw ValidationError(std::string("unexpected character in Dyck word: ") + c);
    }
  }
  return from_steps(std::move(steps));
}

std::string DyckWord::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::Open ? '(' : ')');
  return out;
}

Matching word_to_matching(const Word& word) {
  const auto entries = word.entries();
  const std::size_t n = word.semilength();
  std::vector<std::size_t> first(n + 1, 0);
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int label = entries[i];
    if (first[label] == 0) {
      first[label] = i + 1;
    } else {
      arcs.push_back(Arc{first[label], i + 1, label});
    }
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.opener < b.opener; });
  return Matching::from_arcs(std::move(arcs));
}

Word matching_to_word(const Matching& matching) {
  std::vector<int> entries(2 * matching.semilength(), 0);
  for (const Arc& arc : matching.arcs()) {
    entries[arc.opener - 1] = arc.label;
    entries[arc.closer - 1] = arc.label;
  }
  return Word::from_entries(std::move(entries));
}

std::vector<std::pair<std::size_t, std::size_t>> pair_steps(const DyckWord& dyck, Pairing pairing) {
  std::deque<std::size_t> open;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(dyck.semilength());
  const auto steps = dyck.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Open) {
      open.push_back(i);
      continue;
    }
    std::size_t partner;
    if (pairing == Pairing::Stack) {
      partner = open.back();
      open.pop_back();
    } else {
      partner = open.front();
      open.pop_front();
    }
    arcs.emplace_back(partner, i);
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

Matching dyck_to_matching(const DyckWord& dyck, Pairing pairing, std::span<const int> labeling) {
  if (labeling.size() != dyck.semilength()) {
    throw ValidationError("labeling has " + std::to_string(labeling.size()) +
                          " entries, expected " + std::to_string(dyck.semilength()));
  }
  if (!is_permutation_of_one_to_n(labeling)) {
    throw ValidationError("labeling must be a permutation of 1..n");
  }
  const auto shape = pair_steps(dyck, pairing);
  std::vector<Arc> arcs;
  arcs.reserve(shape.size());
  for (std::size_t k = 0; k < shape.size(); ++k) {
    arcs.push_back(Arc{shape[k].first + 1, shape[k].second + 1, labeling[k]});
  }
  return Matching::from_arcs(std::move(arcs));
}

Word parse_word(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(start, end - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ValidationError("bad label '" + std::string(field) + "' in word");
      }
      entries.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ValidationError(std::string("bad character '") + c + "' in digit-form word");
      }
      entries.push_back(c - '0');
    }
  }
  return Word::from_entries(std::move(entries));
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word.entries()[i]);
  }
  return out;
}

}  // namespace ncnn
