#include "ncnn/recurrences.hpp"

#include <functional>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

// Coefficient of x^m in A(x)B(x), reading only indices <= m.
BigInt convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t m) {
  BigInt sum = 0;
  for (std::size_t i = 0; i <= m; ++i) sum += a[i] * b[m - i];
  return sum;
}

SequenceTable make_table(std::string name, std::vector<BigInt> values, std::size_t offset = 0) {
  return SequenceTable{std::move(name), offset, std::move(values)};
}

}  // namespace

const BigInt& SequenceTable::at(std::size_t n) const {
  if (!has(n)) {
    throw ValidationError("index " + std::to_string(n) + " outside table " + name);
  }
  return values[n - offset];
}

NonNesting231System nonnesting_231_system(std::size_t max_n) {
  std::vector<BigInt> p(max_n + 1, 0), q(max_n + 1, 0), r(max_n + 1, 0), rp(max_n + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t m = n - 1;
    const BigInt unit = (n == 1) ? 1 : 0;
    q[n] = 2 * convolve(rp, q, m) + convolve(q, q, m) + convolve(rp, p, m) + convolve(q, p, m) + unit;
    rp[n] = unit + q[m] + rp[m];
    p[n] = 2 * convolve(r, q, m) + convolve(p, q, m) + convolve(r, p, m) + convolve(p, p, m);
    r[n] = p[m] + r[m];
  }
  return NonNesting231System{make_table("p231", std::move(p)), make_table("q231", std::move(q)),
                             make_table("r231", std::move(r)),
                             make_table("rprime231", std::move(rp))};
}

NonCrossing231System noncrossing_231_system(std::size_t max_n) {
  std::vector<BigInt> p(max_n + 1, 0), q(max_n + 1, 0);
  // Coefficients of P^2 and P^3, filled once p[k] is known.
  std::vector<BigInt> p2(max_n + 1, 0), p3(max_n + 1, 0);
  p[0] = 1;
  p2[0] = 1;
  p3[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t m = n - 1;
    // q[0] = 0, so Q's own term reads only q[1..m].
    q[n] = p[m] + convolve(p, q, m);
    // [x^n] PQ = sum_{k=0}^{n-1} p[k] q[n-k]; q[n] is already known.
    BigInt pq = 0;
    for (std::size_t k = 0; k < n; ++k) pq += p[k] * q[n - k];
    p[n] = p3[m] - p2[m] + pq;
    p2[n] = convolve(p, p, n);
    p3[n] = convolve(p2, p, n);
  }
  return NonCrossing231System{make_table("pbar231", std::move(p)),
                              make_table("qbar231", std::move(q))};
}

SequenceTable qbar_via_compositions(std::size_t max_n) {
  if (max_n > kMaxCompositionN) {
    throw ResourceLimitError("composition sum limited to n <= " + std::to_string(kMaxCompositionN));
  }
  const auto pbar = noncrossing_231_system(max_n).pbar;
  std::vector<BigInt> values(max_n + 1, 0);
  // Sum over compositions of `rest` of the product of pbar[part - 1].
  std::function<BigInt(std::size_t)> sum_over = [&](std::size_t rest) -> BigInt {
    if (rest == 0) return 1;
    BigInt total = 0;
    for (std::size_t part = 1; part <= rest; ++part) {
      total += pbar.values[part - 1] * sum_over(rest - part);
    }
    return total;
  };
  for (std::size_t n = 1; n <= max_n; ++n) values[n] = sum_over(n);
  return make_table("qbar231", std::move(values));
}

SequenceTable closed_form_122(const std::optional<Pattern>& extra, std::size_t max_n) {
  std::string name = "q122";
  std::function<BigInt(std::size_t)> term;
  const std::string sigma = extra ? extra->to_string() : "";
  if (!extra || sigma == "132") {
    term = [](std::size_t n) { return catalan(n); };
  } else if (sigma == "213") {
    term = [](std::size_t n) { return fibonacci(n + 1); };
  } else if (sigma == "231" || sigma == "123") {
    term = [](std::size_t n) {
      BigInt v;
      mpz_ui_pow_ui(v.get_mpz_t(), 2, n - 1);
      return v;
    };
  } else if (sigma == "312") {
    term = [](std::size_t n) { return BigInt(std::to_string(n)); };
  } else if (sigma == "321") {
    term = [](std::size_t n) { return BigInt(n <= 2 ? static_cast<unsigned long>(n) : 0UL); };
  } else {
    throw ValidationError("no closed form for 122 together with " + sigma);
  }
  if (extra) name += "," + sigma;
  std::vector<BigInt> values;
  values.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) values.push_back(term(n));
  return make_table(std::move(name), std::move(values), 1);
}

BigInt catalan(std::size_t n) {
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  return binom / static_cast<unsigned long>(n + 1);
}

BigInt fibonacci(std::size_t n) {
  if (n == 0) throw ValidationError("fibonacci is indexed from 1");
  BigInt v;
  mpz_fib_ui(v.get_mpz_t(), n);
  return v;
}

BigInt factorial(std::size_t n) {
  BigInt v;
  mpz_fac_ui(v.get_mpz_t(), n);
  return v;
}

std::vector<std::string> family_names() {
  return {"p231",     "q231",     "r231",     "rprime231", "pbar231",  "qbar231",
          "q122",     "q122,132", "q122,213", "q122,231",  "q122,123", "q122,312",
          "q122,321"};
}

SequenceTable compute_family(std::string_view name, std::size_t max_n) {
  if (name == "p231") return nonnesting_231_system(max_n).p;
  if (name == "q231") return nonnesting_231_system(max_n).q;
  if (name == "r231") return nonnesting_231_system(max_n).r;
  if (name == "rprime231") return nonnesting_231_system(max_n).rprime;
  if (name == "pbar231") return noncrossing_231_system(max_n).pbar;
  if (name == "qbar231") return noncrossing_231_system(max_n).qbar;
  if (name == "q122") return closed_form_122(std::nullopt, max_n);
  if (name.starts_with("q122,")) {
    const std::string_view sigma = name.substr(5);
    if (sigma.size() == 3) return closed_form_122(Pattern::parse(sigma), max_n);
  }
  throw ValidationError("unknown sequence family '" + std::string(name) + "'");
}

}  // namespace ncnn
