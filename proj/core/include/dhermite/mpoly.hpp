#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dhermite/rational.hpp"

namespace dhermite {

/// Indeterminates of the exact engine. `xi` stands for log(1+tau)/tau and is
/// never differentiated; `eta` is a scratch integration variable that must be
/// eliminated before a polynomial leaves the engine.
enum class Var : std::uint8_t { z1 = 0, z2 = 1, xi = 2, t = 3, eta = 4 };

inline constexpr std::size_t kVarCount = 5;

std::string_view var_name(Var v);

using Exponents = std::array<std::uint32_t, kVarCount>;

/// Exact multivariate polynomial over BigRational in (z1, z2, xi, t[, eta]).
///
/// Terms are kept in a sorted map keyed by the exponent vector; zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class RationalMPoly {
 public:
  using TermMap = std::map<Exponents, BigRational>;

  RationalMPoly() = default;
  RationalMPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  RationalMPoly(long constant);                // NOLINT(google-explicit-constructor)

  static RationalMPoly variable(Var v, std::uint32_t power = 1);
  static RationalMPoly monomial(const BigRational& coeff, const Exponents& exps);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::uint32_t degree(Var v) const;
  /// Coefficient of the given monomial (zero if absent).
  BigRational coefficient(const Exponents& exps) const;
  /// Largest |coefficient| as a double; 0 for the zero polynomial.
  double max_abs_coefficient() const;

  RationalMPoly& operator+=(const RationalMPoly& rhs);
  RationalMPoly& operator-=(const RationalMPoly& rhs);
  RationalMPoly& operator*=(const RationalMPoly& rhs);
  RationalMPoly& operator*=(const BigRational& rhs);

  friend RationalMPoly operator+(RationalMPoly lhs, const RationalMPoly& rhs) { return lhs += rhs; }
  friend RationalMPoly operator-(RationalMPoly lhs, const RationalMPoly& rhs) { return lhs -= rhs; }
  friend RationalMPoly operator*(const RationalMPoly& lhs, const RationalMPoly& rhs);
  friend RationalMPoly operator*(RationalMPoly lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend RationalMPoly operator*(const BigRational& lhs, RationalMPoly rhs) { return rhs *= lhs; }
  RationalMPoly operator-() const;

  friend bool operator==(const RationalMPoly& a, const RationalMPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "-1/6*xi*z1^3".
  std::string to_string() const;

 private:
  void accumulate(const Exponents& exps, const BigRational& coeff);

  TermMap terms_;
};

RationalMPoly poly_add(const RationalMPoly& a, const RationalMPoly& b);
RationalMPoly poly_mul(const RationalMPoly& a, const RationalMPoly& b);
RationalMPoly poly_scale(const RationalMPoly& p, const BigRational& c);
RationalMPoly poly_pow(const RationalMPoly& p, unsigned n);

/// Formal partial derivative. Throws std::invalid_argument for Var::xi.
RationalMPoly poly_diff(const RationalMPoly& p, Var v, unsigned order = 1);

/// Antiderivative in `v` with zero constant of integration.
RationalMPoly poly_antiderivative(const RationalMPoly& p, Var v);

/// Replaces every occurrence of `v` by `value`.
RationalMPoly poly_substitute(const RationalMPoly& p, Var v, const RationalMPoly& value);

/// Definite integral of p over v from `lower` to `upper`. The bounds must not
/// contain `v`.
RationalMPoly poly_integrate_def(const RationalMPoly& p, Var v, const RationalMPoly& lower,
                                 const RationalMPoly& upper);

/// Exact division by a monomial; throws std::domain_error when some term is
/// not divisible.
RationalMPoly poly_divide_monomial(const RationalMPoly& p, const Exponents& divisor);

/// Values for a numeric evaluation; unset variables must not occur in p.
class EvalPoint {
 public:
  EvalPoint& set(Var v, std::complex<double> value) {
    values_[static_cast<std::size_t>(v)] = value;
    return *this;
  }
  const std::optional<std::complex<double>>& get(Var v) const {
    return values_[static_cast<std::size_t>(v)];
  }

 private:
  std::array<std::optional<std::complex<double>>, kVarCount> values_{};
};

/// Numeric value at a point. Throws std::invalid_argument if a variable with
/// positive degree has no value.
std::complex<double> poly_eval(const RationalMPoly& p, const EvalPoint& point);

/// {"terms":[{"e":[z1,z2,xi,t],"num":"..","den":".."}, ...]} in ascending
/// exponent order. Throws std::logic_error if eta is still present.
std::string poly_to_json(const RationalMPoly& p);

}  // namespace dhermite
