#include "dhermite/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dhermite {

namespace {

constexpr unsigned kFactorialTableSize = 513;

const std::vector<BigInteger>& factorial_table() {
  static const std::vector<BigInteger> table = [] {
    std::vector<BigInteger> t(kFactorialTableSize);
    t[0] = 1;
    for (unsigned i = 1; i < kFactorialTableSize; ++i) {
      t[i] = t[i - 1] * i;
    }
    return t;
  }();
  return table;
}

}  // namespace

const BigInteger& factorial(unsigned n) {
  const auto& table = factorial_table();
  if (n < table.size()) {
    return table[n];
  }
  // Rare path; the result must outlive the call, so keep one per thread.
  thread_local BigInteger big;
  big = table.back();
  for (unsigned i = kFactorialTableSize; i <= n; ++i) {
    big *= i;
  }
  return big;
}

double ratio_to_double(const BigInteger& num, const BigInteger& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("ratio_to_double: zero denominator");
  }
  if (sgn(num) == 0) {
    return 0.0;
  }
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, num.get_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, den.get_mpz_t());
  return std::ldexp(num_mant / den_mant, static_cast<int>(num_exp - den_exp));
}

double inv_factorial_d(unsigned n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFactorialTableSize);
    const BigInteger one = 1;
    for (unsigned i = 0; i < kFactorialTableSize; ++i) {
      t[i] = ratio_to_double(one, factorial_table()[i]);
    }
    return t;
  }();
  return n < table.size() ? table[n] : 0.0;
}

BigRational make_rational(long num, long den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

}  // namespace dhermite
