#pragma once

#include <string>
#include <vector>

#include "ncnn/core.hpp"

namespace ncnn {

/// Arcs that have exactly one endpoint strictly inside the arc of the
/// largest label n.
struct LargestArcInterior {
  std::size_t left = 0;   // 1-based positions of the two n's
  std::size_t right = 0;
  std::vector<int> closing_inside;  // labels opened before `left`, closed inside
  std::vector<int> opening_inside;  // labels opened inside, closed after `right`
};

LargestArcInterior largest_arc_interior(const Word& word);

/// Checks, for a 231-avoiding non-nesting word, that at most one arc closes
/// and at most one arc opens inside the n-arc. Returns a description of the
/// first violation, empty if none.
std::string check_interior_counts(const Word& word);

/// Checks that an arc closing inside the n-arc carries the largest label
/// seen before the n-arc, and an arc opening inside carries the smallest
/// label seen after it. Returns the first violation, empty if none.
std::string check_interior_extremes(const Word& word);

}  // namespace ncnn
