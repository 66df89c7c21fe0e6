#include "ncnn/structure.hpp"

#include <algorithm>

#include "ncnn/errors.hpp"

namespace ncnn {

LargestArcInterior largest_arc_interior(const Word& word) {
  if (word.empty()) throw ValidationError("empty word has no largest arc");
  const int n = static_cast<int>(word.semilength());
  const Matching matching = word_to_matching(word);
  LargestArcInterior out;
  for (const Arc& arc : matching.arcs()) {
    if (arc.label == n) {
      out.left = arc.opener;
      out.right = arc.closer;
    }
  }
  for (const Arc& arc : matching.arcs()) {
    if (arc.opener < out.left && out.left < arc.closer && arc.closer < out.right) {
      out.closing_inside.push_back(arc.label);
    }
    if (out.left < arc.opener && arc.opener < out.right && out.right < arc.closer) {
      out.opening_inside.push_back(arc.label);
    }
  }
  return out;
}

std::string check_interior_counts(const Word& word) {
  if (word.empty()) return {};
  const auto interior = largest_arc_interior(word);
  if (interior.closing_inside.size() > 1) {
    return format_word(word) + ": " + std::to_string(interior.closing_inside.size()) +
           " arcs close inside the n-arc";
  }
  if (interior.opening_inside.size() > 1) {
    return format_word(word) + ": " + std::to_string(interior.opening_inside.size()) +
           " arcs open inside the n-arc";
  }
  return {};
}

std::string check_interior_extremes(const Word& word) {
  if (word.empty()) return {};
  const auto interior = largest_arc_interior(word);
  const auto entries = word.entries();
  for (int label : interior.closing_inside) {
    const int max_left = *std::max_element(entries.begin(), entries.begin() + (interior.left - 1));
    if (label != max_left) {
      return format_word(word) + ": label " + std::to_string(label) +
             " closes inside the n-arc but the maximum to its left is " + std::to_string(max_left);
    }
  }
  for (int label : interior.opening_inside) {
    const int min_right = *std::min_element(entries.begin() + interior.right, entries.end());
    if (label != min_right) {
      return format_word(word) + ": label " + std::to_string(label) +
             " opens inside the n-arc but the minimum to its right is " + std::to_string(min_right);
    }
  }
  return {};
}

}  // namespace ncnn
