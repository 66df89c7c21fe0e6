#include "ncnn/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>

#include "ncnn/errors.hpp"

namespace ncnn {

DyckWordStream::DyckWordStream(std::size_t semilength) : n_(semilength) {
  current_.assign(n_, Step::Open);
  current_.insert(current_.end(), n_, Step::Close);
}

std::optional<DyckWord> DyckWordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return DyckWord::from_steps(current_);
  }
  // Rightmost Open that can become Close while keeping the prefix valid;
  // the remainder is refilled with its smallest completion.
  std::size_t opens = 0;
  std::size_t closes = 0;
  std::optional<std::size_t> pivot;
  std::size_t pivot_opens = 0;
  for (std::size_t i = 0; i < current_.size(); ++i) {
    if (current_[i] == Step::Open) {
      if (closes + 1 <= opens && i + 1 < current_.size()) {
        pivot = i;
        pivot_opens = opens;
      }
      ++opens;
    } else {
      ++closes;
    }
  }
  if (!pivot) {
    done_ = true;
    return std::nullopt;
  }
  current_[*pivot] = Step::Close;
  const std::size_t remaining_opens = n_ - pivot_opens;
  std::size_t i = *pivot + 1;
  for (std::size_t k = 0; k < remaining_opens; ++k) current_[i++] = Step::Open;
  while (i < current_.size()) current_[i++] = Step::Close;
  return DyckWord::from_steps(current_);
}

LabeledWordStream::LabeledWordStream(std::size_t semilength, Family family)
    : n_(semilength), pairing_(pairing_for(family)), shapes_(semilength) {}

std::optional<Word> LabeledWordStream::next() {
  if (have_shape_ && !std::next_permutation(labeling_.begin(), labeling_.end())) {
    have_shape_ = false;
  }
  if (!have_shape_) {
    auto shape = shapes_.next();
    if (!shape) return std::nullopt;
    arcs_ = pair_steps(*shape, pairing_);
    labeling_.resize(n_);
    std::iota(labeling_.begin(), labeling_.end(), 1);
    have_shape_ = true;
  }
  std::vector<int> entries(2 * n_);
  for (std::size_t k = 0; k < n_; ++k) {
    entries[arcs_[k].first] = entries[arcs_[k].second] = labeling_[k];
  }
  return Word::from_entries(std::move(entries));
}

std::vector<DyckWord> dyck_words(std::size_t semilength) {
  std::vector<DyckWord> out;
  DyckWordStream stream(semilength);
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

std::vector<Word> labeled_words(std::size_t semilength, Family family) {
  std::vector<Word> out;
  LabeledWordStream stream(semilength, family);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

bool satisfies(std::span<const int> word, Constraint constraint) {
  if (constraint == Constraint::None) return true;
  if (word.empty()) return false;
  const int n = static_cast<int>(word.size() / 2);
  const bool first = word.front() == 1;
  const bool last = word.back() == n;
  switch (constraint) {
    case Constraint::FirstIsOne:
      return first;
    case Constraint::LastIsN:
      return last;
    case Constraint::FirstIsOneAndLastIsN:
      return first && last;
    case Constraint::None:
      break;
  }
  return true;
}

namespace {

std::uint64_t count_range(std::span<const DyckWord> shapes, const CountQuery& query) {
  const std::size_t n = query.semilength;
  const Pairing pairing = pairing_for(query.family);
  std::uint64_t total = 0;
  std::vector<int> labeling(n);
  std::vector<int> entries(2 * n);
  for (const DyckWord& shape : shapes) {
    const auto arcs = pair_steps(shape, pairing);
    std::iota(labeling.begin(), labeling.end(), 1);
    do {
      for (std::size_t k = 0; k < n; ++k) {
        entries[arcs[k].first] = entries[arcs[k].second] = labeling[k];
      }
      if (satisfies(entries, query.constraint) && avoids_all(entries, query.forbidden)) ++total;
    } while (std::next_permutation(labeling.begin(), labeling.end()));
  }
  return total;
}

}  // namespace

BigInt count_avoiders(const CountQuery& query, const CountOptions& options) {
  if (query.semilength > options.cap) {
    throw ResourceLimitError("semilength " + std::to_string(query.semilength) +
                             " exceeds the enumeration cap " + std::to_string(options.cap) +
                             "; use the recurrence tables instead");
  }
  const auto shapes = dyck_words(query.semilength);
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, shapes.size());
  if (workers == 1) return BigInt(std::to_string(count_range(shapes, query)));

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  const std::size_t chunk = (shapes.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(shapes.size(), w * chunk);
    const std::size_t end = std::min(shapes.size(), begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      partial[w] = count_range(std::span<const DyckWord>(shapes).subspan(begin, end - begin), query);
    });
  }
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return BigInt(std::to_string(total));
}

std::vector<std::vector<int>> avoiding_labelings(const DyckWord& shape, Pairing pairing,
                                                 std::span<const Pattern> patterns) {
  const std::size_t n = shape.semilength();
  const auto arcs = pair_steps(shape, pairing);
  std::vector<int> labeling(n);
  std::iota(labeling.begin(), labeling.end(), 1);
  std::vector<int> entries(2 * n);
  std::vector<std::vector<int>> out;
  do {
    for (std::size_t k = 0; k < n; ++k) {
      entries[arcs[k].first] = entries[arcs[k].second] = labeling[k];
    }
    if (avoids_all(entries, patterns)) out.push_back(labeling);
  } while (std::next_permutation(labeling.begin(), labeling.end()));
  return out;
}

std::vector<int> decreasing_labeling(std::size_t semilength) {
  std::vector<int> out(semilength);
  for (std::size_t k = 0; k < semilength; ++k) out[k] = static_cast<int>(semilength - k);
  return out;
}

}  // namespace ncnn
