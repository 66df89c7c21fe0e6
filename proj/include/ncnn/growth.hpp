#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncnn/bignum.hpp"
#include "ncnn/core.hpp"
#include "ncnn/recurrences.hpp"

namespace ncnn {

/// Integer polynomial, constant term first. Leading zeros are trimmed, so
/// the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(std::size_t power) const;
  bool is_zero() const { return coefficients_.empty(); }
  /// Degree; 0 for the zero polynomial.
  std::size_t degree() const;

  Rational evaluate(const Rational& x) const;
  /// Exact sign of p(x) computed over the integers.
  int sign_at(const Rational& x) const;

  /// Largest k with x^k dividing p (0 for the zero polynomial).
  std::size_t lowest_power() const;
  /// p / x^lowest_power().
  IntPolynomial without_x_factor() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// A decimal value with an error bound such that value +/- error_bound
/// contains [lower, upper], the exact enclosure it was rendered from.
struct DecimalApprox {
  std::string value;
  std::string error_bound;
  Rational lower;
  Rational upper;
};

/// Renders the midpoint of [lower, upper] with `places` digits and an
/// error bound rounded up so the bracket stays a certificate.
DecimalApprox approximate(const Rational& lower, const Rational& upper, unsigned places);

struct RootSearchOptions {
  Rational scan_upper = 1;
  /// The scan grid doubles from one cell up to this many cells.
  std::size_t max_cells = 40;
};

struct RootBracket {
  Rational lower;
  Rational upper;
  bool exact = false;            // lower == upper is a root
  std::size_t stripped_power = 0;  // trivial x^k factor removed before the scan
  DecimalApprox approx;
};

/// Smallest positive root of p / x^k, bracketed to width <= tolerance by
/// exact sign evaluation and bisection. Throws RootNotFoundError when no
/// sign change appears on (0, scan_upper].
RootBracket minimal_positive_root(const IntPolynomial& polynomial, const Rational& tolerance,
                                  const RootSearchOptions& options = {});

/// The polynomial under the square root of the explicit solution of the
/// family's algebraic equation.
IntPolynomial builtin_radicand(Family family);

/// Reciprocal of a positive enclosure [lower, upper].
DecimalApprox reciprocal_approx(const Rational& lower, const Rational& upper, unsigned places);

/// 1 / (minimal positive root of the family's radicand).
DecimalApprox growth_rate(Family family, const Rational& tolerance = Rational(1, 1000000000000));

/// s(n) / s(n-1) rounded half-even to `places` digits.
DecimalApprox ratio(const SequenceTable& table, std::size_t n, unsigned places);

/// Number of fractional digits needed to show a quantity of size `tolerance`.
unsigned places_for(const Rational& tolerance);

}  // namespace ncnn
