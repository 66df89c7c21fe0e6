#include "ncnn/decimal.hpp"

#include <cctype>

#include "ncnn/errors.hpp"

namespace ncnn {

std::string format_decimal(const Rational& value, unsigned places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const Rational scaled = abs(value) * Rational(scale);
  BigInt quotient;
  BigInt remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_num_mpz_t(),
              scaled.get_den_mpz_t());
  // Compare remainder/den against 1/2.
  const int half = cmp(BigInt(2 * remainder), scaled.get_den());
  if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;

  std::string digits = quotient.get_str(10);
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = (value < 0 && quotient != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

std::string format_decimal_up(const Rational& value, unsigned places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const Rational scaled = value * Rational(scale);
  BigInt ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return format_decimal(make_rational(ceiling, scale), places);
}

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw ValidationError("'" + text + "' is not a plain decimal number");
    }
  }
  if (digits.empty()) throw ValidationError("'" + text + "' is not a plain decimal number");
  BigInt denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  const Rational out = make_rational(BigInt(digits, 10), denominator);
  return negative ? Rational(-out) : out;
}

}  // namespace ncnn
