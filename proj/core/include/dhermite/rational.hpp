#pragma once

#include <gmpxx.h>

#include <string>

namespace dhermite {

/// Arbitrary-precision rational, always kept in canonical form (reduced,
/// positive denominator, zero is 0/1).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// n! for any n; values up to 512 are served from a shared table.
const BigInteger& factorial(unsigned n);

/// num/den rounded to double without forming the (possibly huge) quotient.
/// Both operands may exceed the double range; the ratio must not.
double ratio_to_double(const BigInteger& num, const BigInteger& den);

/// 1/n! correctly rounded from the exact value; cached, thread-safe.
double inv_factorial_d(unsigned n);

/// Builds a canonical rational from an integer fraction.
BigRational make_rational(long num, long den = 1);

std::string to_string(const BigRational& value);

}  // namespace dhermite
