#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dhermite {

using cplx = std::complex<double>;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex double
/// coefficients. Every operation keeps the order of its left operand and never
/// reads coefficients beyond it.
class ComplexSeries {
 public:
  explicit ComplexSeries(std::size_t order = 0) : coeffs_(order + 1, cplx{}) {}
  ComplexSeries(std::vector<cplx> coeffs, std::size_t order);

  static ComplexSeries constant(cplx c, std::size_t order);
  /// c0 + c1 z
  static ComplexSeries linear(cplx c0, cplx c1, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  cplx operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : cplx{}; }
  cplx& at(std::size_t i) { return coeffs_.at(i); }

  /// Horner evaluation of the truncated polynomial.
  cplx evaluate(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

ComplexSeries series_add(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries series_scale(const ComplexSeries& a, cplx c);

/// exp(a). The constant term enters as the scalar factor e^{a_0}.
ComplexSeries series_exp(const ComplexSeries& a);

/// a^s on the principal branch of a_0^s. Throws std::domain_error if a_0 == 0.
ComplexSeries series_pow_binomial(const ComplexSeries& a, cplx s);

/// a^n by repeated squaring; valid for a_0 == 0.
ComplexSeries series_pow_int(const ComplexSeries& a, unsigned n);

/// f(c z + d) truncated to the order of f. Exact when f is a polynomial of
/// degree <= order; otherwise only meaningful for d == 0.
ComplexSeries series_compose_affine(const ComplexSeries& f, cplx c, cplx d);

}  // namespace dhermite
