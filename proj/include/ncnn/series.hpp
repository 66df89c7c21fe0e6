#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncnn/bignum.hpp"

namespace ncnn {

/// Power series c0 + c1 x + ... + cN x^N with exact rational coefficients,
/// known modulo x^(N+1). Binary operations on mixed orders yield the smaller
/// order; nothing beyond a series' order is ever read or invented.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  /// Order is coefficients.size() - 1; coefficients must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);
  static TruncatedSeries from_integers(const std::vector<BigInt>& coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  Rational& operator[](std::size_t i) { return coefficients_[i]; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Numerators; precondition is_integral().
  std::vector<BigInt> integer_coefficients() const;

  /// Keeps coefficients 0..order; order must not exceed the current one.
  TruncatedSeries truncated(std::size_t order) const;
  /// Appends zero coefficients up to `order`. Explicit: the caller asserts
  /// that the extra coefficients are known to be zero or will be solved for.
  TruncatedSeries padded(std::size_t order) const;

  /// "c0 + c1*x + c2*x^2 + ..."; every coefficient is printed.
  std::string render() const;
  /// JSON array of exact decimal strings ("p/q" for non-integers).
  std::string to_json() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor);
/// x * a, keeping a's order (the top coefficient falls off).
TruncatedSeries shift_by_x(const TruncatedSeries& a);
/// 1 / a; requires a[0] != 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// Sum of c[i][j] x^i y^j with integer coefficients.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;

  void set(std::size_t x_power, std::size_t y_power, BigInt value);
  /// Adds to an existing coefficient.
  void add_term(std::size_t x_power, std::size_t y_power, const BigInt& value);
  BigInt coefficient(std::size_t x_power, std::size_t y_power) const;

  /// Largest y power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree_y() const;
  std::size_t degree_x() const;
  bool is_zero() const;

  /// Coefficient of y^j as a polynomial in x (constant term first).
  std::vector<BigInt> y_coefficient(std::size_t y_power) const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  BivariatePolynomial derivative_y() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void trim();
  // grid_[j][i] is the coefficient of x^i y^j.
  std::vector<std::vector<BigInt>> grid_;
};

enum class SolveMethod {
  Auto,         // order doubling above kNewtonThreshold, order by order otherwise
  OrderByOrder,
  Newton,
};

inline constexpr std::size_t kNewtonThreshold = 64;

/// The unique power series y with y(0) = y0 and F(x, y(x)) = 0 mod x^(N+1).
/// Throws SolverError when F(0, y0) != 0 or dF/dy(0, y0) == 0.
TruncatedSeries solve_algebraic(const BivariatePolynomial& equation, const Rational& y0,
                                std::size_t order, SolveMethod method = SolveMethod::Auto);

/// F(x, y(x)) truncated at y's order.
TruncatedSeries residual(const BivariatePolynomial& equation, const TruncatedSeries& y);

enum class BuiltinEquation {
  NonNesting231,   // x^3y^3 - (x^3+3x^2+x)y^2 + (2x^2-x+1)y + x - 1
  NonCrossing231,  // x^2y^4 - (x^2+x)y^3 - xy^2 + (x+1)y - 1
};

BivariatePolynomial builtin_equation(BuiltinEquation which);

}  // namespace ncnn
