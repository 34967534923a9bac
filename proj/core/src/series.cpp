#include "dhermite/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhermite {

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, cplx{});
}

ComplexSeries ComplexSeries::constant(cplx c, std::size_t order) {
  ComplexSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

ComplexSeries ComplexSeries::linear(cplx c0, cplx c1, std::size_t order) {
  ComplexSeries s(order);
  s.coeffs_[0] = c0;
  if (order >= 1) s.coeffs_[1] = c1;
  return s;
}

cplx ComplexSeries::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

ComplexSeries series_add(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out = a;
  for (std::size_t i = 0; i <= a.order(); ++i) {
    out.at(i) += b[i];
  }
  return out;
}

ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b) {
  const std::size_t n = a.order();
  ComplexSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; i + j <= n && j <= b.order(); ++j) {
      out.at(i + j) += a[i] * b[j];
    }
  }
  return out;
}

ComplexSeries series_scale(const ComplexSeries& a, cplx c) {
  ComplexSeries out = a;
  for (std::size_t i = 0; i <= a.order(); ++i) {
    out.at(i) *= c;
  }
  return out;
}

ComplexSeries series_exp(const ComplexSeries& a) {
  // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
  const std::size_t n = a.order();
  ComplexSeries b(n);
  b.at(0) = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k <= m; ++k) {
      acc += static_cast<double>(k) * a[k] * b[m - k];
    }
    b.at(m) = acc / static_cast<double>(m);
  }
  return series_scale(b, std::exp(a[0]));
}

ComplexSeries series_pow_binomial(const ComplexSeries& a, cplx s) {
  const cplx a0 = a[0];
  if (a0 == cplx{}) {
    throw std::domain_error("series_pow_binomial: zero constant term");
  }
  // m a_0 b_m = sum_{k=1}^{m} ((s+1)k - m) a_k b_{m-k}
  const std::size_t n = a.order();
  ComplexSeries b(n);
  b.at(0) = std::pow(a0, s);
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k <= m; ++k) {
      acc += ((s + 1.0) * static_cast<double>(k) - static_cast<double>(m)) * a[k] * b[m - k];
    }
    b.at(m) = acc / (static_cast<double>(m) * a0);
  }
  return b;
}

ComplexSeries series_pow_int(const ComplexSeries& a, unsigned n) {
  ComplexSeries result = ComplexSeries::constant(1.0, a.order());
  ComplexSeries base = a;
  while (n > 0) {
    if (n & 1u) result = series_mul(result, base);
    n >>= 1u;
    if (n > 0) base = series_mul(base, base);
  }
  return result;
}

ComplexSeries series_compose_affine(const ComplexSeries& f, cplx c, cplx d) {
  // Horner in the series ring: (((f_N) u + f_{N-1}) u + ...) with u = c z + d.
  const std::size_t n = f.order();
  const ComplexSeries u = ComplexSeries::linear(d, c, n);
  ComplexSeries acc(n);
  for (std::size_t i = n + 1; i-- > 0;) {
    acc = series_mul(acc, u);
    acc.at(0) += f[i];
  }
  return acc;
}

}  // namespace dhermite
