#include "ncnn/series.hpp"

#include <algorithm>
#include <json.hpp>

#include "ncnn/errors.hpp"

namespace ncnn {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ValidationError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<BigInt>& coefficients) {
  std::vector<Rational> out;
  out.reserve(coefficients.size());
  for (const BigInt& c : coefficients) out.emplace_back(c);
  return TruncatedSeries(std::move(out));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> TruncatedSeries::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(coefficients_.size());
  for (const Rational& c : coefficients_) {
    if (c.get_den() != 1) throw ValidationError("series coefficient " + to_decimal(c) + " is not an integer");
    out.push_back(c.get_num());
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw ValidationError("cannot truncate a series to a higher order");
  return TruncatedSeries(std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::padded(std::size_t order) const {
  auto out = coefficients_;
  if (order + 1 > out.size()) out.resize(order + 1, Rational(0));
  return TruncatedSeries(std::move(out));
}

std::string TruncatedSeries::render() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    std::string magnitude = to_decimal(Rational(abs(c)));
    if (i == 0) {
      out += to_decimal(c);
    } else {
      out += (c < 0) ? " - " : " + ";
      out += magnitude;
    }
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

std::string TruncatedSeries::to_json() const {
  nlohmann::json array = nlohmann::json::array();
  for (const Rational& c : coefficients_) array.push_back(to_decimal(c));
  return array.dump();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  if (a.is_integral() && b.is_integral()) {
    // Integer convolution avoids canonicalising a rational per product.
    BigInt sum;
    for (std::size_t n = 0; n <= order; ++n) {
      sum = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        mpz_addmul(sum.get_mpz_t(), a[i].get_num_mpz_t(), b[n - i].get_num_mpz_t());
      }
      out[n] = Rational(sum);
    }
    return out;
  }
  for (std::size_t n = 0; n <= order; ++n) {
    Rational sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += a[i] * b[n - i];
    out[n] = sum;
  }
  return out;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i] * factor;
  return out;
}

TruncatedSeries shift_by_x(const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) out[i] = a[i - 1];
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0) throw ValidationError("series with zero constant term has no reciprocal");
  TruncatedSeries out(a.order());
  const Rational inverse_lead = 1 / a[0];
  out[0] = inverse_lead;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += a[k] * out[n - k];
    out[n] = -inverse_lead * sum;
  }
  return out;
}

void BivariatePolynomial::set(std::size_t x_power, std::size_t y_power, BigInt value) {
  if (grid_.size() <= y_power) grid_.resize(y_power + 1);
  auto& row = grid_[y_power];
  if (row.size() <= x_power) row.resize(x_power + 1, BigInt(0));
  row[x_power] = std::move(value);
  trim();
}

void BivariatePolynomial::add_term(std::size_t x_power, std::size_t y_power, const BigInt& value) {
  set(x_power, y_power, coefficient(x_power, y_power) + value);
}

BigInt BivariatePolynomial::coefficient(std::size_t x_power, std::size_t y_power) const {
  if (y_power >= grid_.size() || x_power >= grid_[y_power].size()) return 0;
  return grid_[y_power][x_power];
}

void BivariatePolynomial::trim() {
  for (auto& row : grid_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

std::size_t BivariatePolynomial::degree_y() const { return grid_.empty() ? 0 : grid_.size() - 1; }

std::size_t BivariatePolynomial::degree_x() const {
  std::size_t degree = 0;
  for (const auto& row : grid_) {
    if (!row.empty()) degree = std::max(degree, row.size() - 1);
  }
  return degree;
}

bool BivariatePolynomial::is_zero() const { return grid_.empty(); }

std::vector<BigInt> BivariatePolynomial::y_coefficient(std::size_t y_power) const {
  if (y_power >= grid_.size()) return {};
  return grid_[y_power];
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (std::size_t j = grid_.size(); j-- > 0;) {
    Rational row_value = 0;
    for (std::size_t i = grid_[j].size(); i-- > 0;) row_value = row_value * x + Rational(grid_[j][i]);
    total = total * y + row_value;
  }
  return total;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  BivariatePolynomial out;
  for (std::size_t j = 1; j < grid_.size(); ++j) {
    for (std::size_t i = 0; i < grid_[j].size(); ++i) {
      if (grid_[j][i] != 0) out.set(i, j - 1, grid_[j][i] * static_cast<unsigned long>(j));
    }
  }
  return out;
}

namespace {

TruncatedSeries x_polynomial_as_series(const std::vector<BigInt>& poly, std::size_t order) {
  TruncatedSeries out(order);
  for (std::size_t i = 0; i < poly.size() && i <= order; ++i) out[i] = Rational(poly[i]);
  return out;
}

TruncatedSeries order_by_order(const BivariatePolynomial& equation, const Rational& y0,
                               const Rational& slope, std::size_t order) {
  TruncatedSeries y(order);
  y[0] = y0;
  for (std::size_t n = 1; n <= order; ++n) {
    // With y[n] still zero, the x^n coefficient of F(x, y) is linear in the
    // unknown y[n] with slope dF/dy(0, y0).
    const TruncatedSeries partial = residual(equation, y.truncated(n));
    y[n] = -partial[n] / slope;
  }
  return y;
}

TruncatedSeries newton(const BivariatePolynomial& equation, const Rational& y0, std::size_t order) {
  const BivariatePolynomial derivative = equation.derivative_y();
  TruncatedSeries y(std::vector<Rational>{y0});
  std::size_t precision = 1;  // y is correct modulo x^precision
  while (precision < order + 1) {
    precision = std::min(2 * precision, order + 1);
    const TruncatedSeries current = y.padded(precision - 1);
    const TruncatedSeries value = residual(equation, current);
    const TruncatedSeries slope = residual(derivative, current);
    y = sub(current, mul(value, reciprocal(slope)));
  }
  return y;
}

}  // namespace

TruncatedSeries residual(const BivariatePolynomial& equation, const TruncatedSeries& y) {
  const std::size_t order = y.order();
  if (equation.is_zero()) return TruncatedSeries(order);
  TruncatedSeries acc = x_polynomial_as_series(equation.y_coefficient(equation.degree_y()), order);
  for (std::size_t j = equation.degree_y(); j-- > 0;) {
    acc = add(mul(acc, y), x_polynomial_as_series(equation.y_coefficient(j), order));
  }
  return acc;
}

TruncatedSeries solve_algebraic(const BivariatePolynomial& equation, const Rational& y0,
                                std::size_t order, SolveMethod method) {
  const Rational at_origin = equation.evaluate(0, y0);
  if (at_origin != 0) {
    throw SolverError("F(0, y0) = " + to_decimal(at_origin) + ", expected 0: y0 is not a root at x = 0");
  }
  const Rational slope = equation.derivative_y().evaluate(0, y0);
  if (slope == 0) {
    throw SolverError("dF/dy(0, y0) = 0: the root at x = 0 is not simple");
  }
  if (method == SolveMethod::Auto) {
    method = order > kNewtonThreshold ? SolveMethod::Newton : SolveMethod::OrderByOrder;
  }
  if (method == SolveMethod::Newton) return newton(equation, y0, order);
  return order_by_order(equation, y0, slope, order);
}

BivariatePolynomial builtin_equation(BuiltinEquation which) {
  BivariatePolynomial f;
  if (which == BuiltinEquation::NonNesting231) {
    f.set(3, 3, 1);
    f.set(3, 2, -1);
    f.set(2, 2, -3);
    f.set(1, 2, -1);
    f.set(2, 1, 2);
    f.set(1, 1, -1);
    f.set(0, 1, 1);
    f.set(1, 0, 1);
    f.set(0, 0, -1);
  } else {
    f.set(2, 4, 1);
    f.set(2, 3, -1);
    f.set(1, 3, -1);
    f.set(1, 2, -1);
    f.set(1, 1, 1);
    f.set(0, 1, 1);
    f.set(0, 0, -1);
  }
  return f;
}

}  // namespace ncnn
