#pragma once

#include <string>

#include "ncnn/bignum.hpp"

namespace ncnn {

/// Exact decimal rendering of a rational with `places` fractional digits,
/// rounding half to even. No scientific notation.
std::string format_decimal(const Rational& value, unsigned places);

/// Smallest multiple of 10^-places that is >= value.
std::string format_decimal_up(const Rational& value, unsigned places);

/// Parses a plain decimal ("-0.161809", "7", "1e-6" is rejected) exactly.
Rational parse_decimal(const std::string& text);

}  // namespace ncnn
