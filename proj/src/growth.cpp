#include "ncnn/growth.hpp"

#include <algorithm>

#include "ncnn/decimal.hpp"
#include "ncnn/errors.hpp"

namespace ncnn {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
}

std::size_t IntPolynomial::degree() const {
  return coefficients_.empty() ? 0 : coefficients_.size() - 1;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational value = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) value = value * x + Rational(coefficients_[i]);
  return value;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // den^d * p(num/den) = sum c_i num^i den^(d-i), all integers.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt value = 0;
  BigInt den_power = 1;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    value = value * num + coefficients_[i] * den_power;
    den_power *= den;
  }
  return sgn(value);
}

std::size_t IntPolynomial::lowest_power() const {
  std::size_t k = 0;
  while (k < coefficients_.size() && coefficients_[k] == 0) ++k;
  return coefficients_.empty() ? 0 : k;
}

IntPolynomial IntPolynomial::without_x_factor() const {
  const std::size_t k = lowest_power();
  return IntPolynomial(std::vector<BigInt>(coefficients_.begin() + k, coefficients_.end()));
}

unsigned places_for(const Rational& tolerance) {
  unsigned places = 0;
  Rational step = 1;
  while (step > tolerance && places < 200) {
    step /= 10;
    ++places;
  }
  return places;
}

DecimalApprox approximate(const Rational& lower, const Rational& upper, unsigned places) {
  const Rational midpoint = (lower + upper) / 2;
  DecimalApprox out;
  out.lower = lower;
  out.upper = upper;
  out.value = format_decimal(midpoint, places);
  const Rational shown = parse_decimal(out.value);
  Rational bound = std::max(Rational(abs(shown - lower)), Rational(abs(upper - shown)));
  Rational unit = 1;
  for (unsigned i = 0; i < places; ++i) unit /= 10;
  if (bound < unit) bound = unit;
  out.error_bound = format_decimal_up(bound, places);
  return out;
}

RootBracket minimal_positive_root(const IntPolynomial& polynomial, const Rational& tolerance,
                                  const RootSearchOptions& options) {
  if (tolerance <= 0) throw ValidationError("root tolerance must be positive");
  if (options.max_cells == 0 || options.scan_upper <= 0) {
    throw ValidationError("root scan needs a positive range and at least one cell");
  }
  if (polynomial.is_zero()) throw RootNotFoundError("the zero polynomial has no isolated roots");
  const IntPolynomial reduced = polynomial.without_x_factor();
  const unsigned places = places_for(tolerance) + 1;

  RootBracket out;
  out.stripped_power = polynomial.lowest_power();
  auto finish_exact = [&](const Rational& root) {
    out.lower = out.upper = root;
    out.exact = true;
    out.approx = approximate(root, root, places);
    return out;
  };

  Rational lower;
  Rational upper;
  bool found = false;
  for (std::size_t cells = 1; !found; cells = std::min(2 * cells, options.max_cells)) {
    Rational left = 0;
    int left_sign = reduced.sign_at(left);
    for (std::size_t i = 1; i <= cells; ++i) {
      const Rational right = options.scan_upper * make_rational(i, cells);
      const int right_sign = reduced.sign_at(right);
      if (right_sign == 0) return finish_exact(right);
      if (left_sign * right_sign < 0) {
        lower = left;
        upper = right;
        found = true;
        break;
      }
      left = right;
      left_sign = right_sign;
    }
    if (!found && cells == options.max_cells) {
      throw RootNotFoundError("no sign change on (0, " + to_decimal(options.scan_upper) + "] with " +
                              std::to_string(cells) + " cells");
    }
  }

  const int lower_sign = reduced.sign_at(lower);
  while (upper - lower > tolerance) {
    const Rational mid = (lower + upper) / 2;
    const int mid_sign = reduced.sign_at(mid);
    if (mid_sign == 0) return finish_exact(mid);
    if (mid_sign == lower_sign) {
      lower = mid;
    } else {
      upper = mid;
    }
  }
  out.lower = lower;
  out.upper = upper;
  out.approx = approximate(lower, upper, places);
  return out;
}

IntPolynomial builtin_radicand(Family family) {
  auto make = [](std::initializer_list<std::pair<std::size_t, long>> terms) {
    std::size_t degree = 0;
    for (const auto& [power, c] : terms) degree = std::max(degree, power);
    std::vector<BigInt> coefficients(degree + 1, BigInt(0));
    for (const auto& [power, c] : terms) coefficients[power] = c;
    return IntPolynomial(std::move(coefficients));
  };
  if (family == Family::NonNesting) {
    return make({{8, -1}, {9, 4}, {10, -2}, {11, 92}, {12, 47}, {13, -140}, {14, -76}, {15, 16},
                 {16, -8}});
  }
  return make({{3, -108}, {4, 621}, {5, 432}, {6, 10206}, {7, 432}, {8, 621}, {9, -108}});
}

DecimalApprox reciprocal_approx(const Rational& lower, const Rational& upper, unsigned places) {
  if (lower <= 0 || upper < lower) throw ValidationError("reciprocal needs 0 < lower <= upper");
  return approximate(1 / upper, 1 / lower, places);
}

DecimalApprox growth_rate(Family family, const Rational& tolerance) {
  const RootBracket root = minimal_positive_root(builtin_radicand(family), tolerance);
  return reciprocal_approx(root.lower, root.upper, places_for(tolerance));
}

DecimalApprox ratio(const SequenceTable& table, std::size_t n, unsigned places) {
  if (n < 1 || !table.has(n) || !table.has(n - 1)) {
    throw ValidationError("ratio index " + std::to_string(n) + " outside table " + table.name);
  }
  const BigInt& previous = table.at(n - 1);
  if (previous == 0) {
    throw ValidationError(table.name + "(" + std::to_string(n - 1) + ") is zero");
  }
  const Rational exact = make_rational(table.at(n), previous);
  DecimalApprox out;
  out.lower = out.upper = exact;
  out.value = format_decimal(exact, places);
  Rational half_unit(1, 2);
  for (unsigned i = 0; i < places; ++i) half_unit /= 10;
  out.error_bound = format_decimal_up(half_unit, places + 1);
  return out;
}

}  // namespace ncnn
