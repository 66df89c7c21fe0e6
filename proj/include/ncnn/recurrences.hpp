#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncnn/bignum.hpp"
#include "ncnn/patterns.hpp"

namespace ncnn {

/// A named finite integer sequence a(offset), a(offset+1), ...
///
/// Offset is 0 for every family except the closed forms for 122-avoiders,
/// which are only defined from n = 1.
struct SequenceTable {
  std::string name;
  std::size_t offset = 0;
  std::vector<BigInt> values;

  std::size_t size() const { return values.size(); }
  /// Largest index held; only meaningful when non-empty.
  std::size_t last_index() const { return offset + values.size() - 1; }
  bool has(std::size_t n) const { return n >= offset && n - offset < values.size(); }
  /// Throws ValidationError when n is outside the table.
  const BigInt& at(std::size_t n) const;

  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

/// Non-nesting 231-avoiders: all (p), starting with 1 (q), ending with n
/// (r), and both (rprime).
struct NonNesting231System {
  SequenceTable p;
  SequenceTable q;
  SequenceTable r;
  SequenceTable rprime;
};

/// Extracts coefficients jointly from
///   P  = 2xRQ + xPQ + xRP + xP^2 + 1
///   Q  = 2xR'Q + xQ^2 + xR'P + xQP + x
///   R  = xP + xR
///   R' = x + xQ + xR'
/// in increasing degree; every right-hand term carries a factor x.
NonNesting231System nonnesting_231_system(std::size_t max_n);

struct NonCrossing231System {
  SequenceTable pbar;
  SequenceTable qbar;
};

/// Extracts coefficients jointly from P = xP^2(P - 1) + PQ + 1 and
/// Q = xP + xPQ.
NonCrossing231System noncrossing_231_system(std::size_t max_n);

inline constexpr std::size_t kMaxCompositionN = 20;

/// qbar(n) as a sum over compositions (x1..xk) of n of prod pbar(xi - 1).
/// Exponential in n; throws ResourceLimitError beyond kMaxCompositionN.
SequenceTable qbar_via_compositions(std::size_t max_n);

/// Closed forms for non-crossing words avoiding 122 and optionally one more
/// pattern of length 3, for n = 1..max_n (offset 1).
SequenceTable closed_form_122(const std::optional<Pattern>& extra, std::size_t max_n);

BigInt catalan(std::size_t n);
/// F(1) = F(2) = 1. Throws ValidationError for n = 0.
BigInt fibonacci(std::size_t n);
BigInt factorial(std::size_t n);

/// Names accepted by compute_family.
std::vector<std::string> family_names();

/// "p231", "q231", "r231", "rprime231", "pbar231", "qbar231", "q122" or
/// "q122,<sigma>". Throws ValidationError for unknown names.
SequenceTable compute_family(std::string_view name, std::size_t max_n);

}  // namespace ncnn
