#pragma once

#include <gmpxx.h>

#include <string>

namespace ncnn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// "p/q" for non-integers, plain decimal otherwise.
inline std::string to_decimal(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace ncnn
