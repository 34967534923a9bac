#include "dhermite/polys.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ipow.hpp"

namespace dhermite {

using detail::ipow;

namespace {

constexpr std::array<std::pair<PolyFamily, std::string_view>, 8> kFamilyNames = {{
    {PolyFamily::HermiteClassical, "hermite"},
    {PolyFamily::HermiteNumber, "hermite-number"},
    {PolyFamily::Hermite2V, "hermite2"},
    {PolyFamily::DHP2V, "dhp2"},
    {PolyFamily::DHP1V, "dhp1"},
    {PolyFamily::LaguerreGen, "laguerre"},
    {PolyFamily::Confluent1F1, "1f1"},
    {PolyFamily::LauricellaF111, "lauricella"},
}};

double coeff_d(const BigInteger& num, const BigInteger& den) { return ratio_to_double(num, den); }

Exponents exps(unsigned z1, unsigned z2, unsigned xi = 0, unsigned t = 0) {
  return Exponents{z1, z2, xi, t, 0};
}

bool is_nonpositive_integer(cplx a) {
  return a.imag() == 0.0 && a.real() <= 0.0 && std::floor(a.real()) == a.real();
}

}  // namespace

cplx xi_of_tau(cplx tau) {
  if (tau == cplx(-1.0, 0.0)) {
    throw std::domain_error("xi_of_tau: tau = -1 is outside the domain");
  }
  if (tau == cplx{}) {
    return 1.0;
  }
  if (std::abs(tau) < 1e-4) {
    // log(1+tau)/tau = 1 - tau/2 + tau^2/3 - ...
    cplx acc{};
    for (int k = 7; k >= 1; --k) {
      acc = acc * (-tau) + 1.0 / static_cast<double>(k);
    }
    return acc;
  }
  return std::log(1.0 + tau) / tau;
}

std::string_view family_name(PolyFamily f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<PolyFamily> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

bool family_has_exact(PolyFamily f) {
  switch (f) {
    case PolyFamily::HermiteClassical:
    case PolyFamily::HermiteNumber:
    case PolyFamily::Hermite2V:
    case PolyFamily::DHP2V:
    case PolyFamily::DHP1V:
      return true;
    default:
      return false;
  }
}

cplx hermite_classical(unsigned m, cplx z) {
  // Forward recurrence H_{n+1} = 2z H_n - 2n H_{n-1}.
  cplx prev = 1.0;
  if (m == 0) return prev;
  cplx cur = 2.0 * z;
  for (unsigned n = 1; n < m; ++n) {
    const cplx next = 2.0 * z * cur - 2.0 * static_cast<double>(n) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

RationalMPoly hermite_classical_exact(unsigned m) {
  RationalMPoly out;
  for (unsigned s = 0; 2 * s <= m; ++s) {
    BigInteger pow2 = 1;
    pow2 <<= (m - 2 * s);
    BigRational c(factorial(m) * pow2, factorial(s) * factorial(m - 2 * s));
    c.canonicalize();
    if (s % 2 == 1) c = -c;
    out += RationalMPoly::monomial(c, exps(m - 2 * s, 0));
  }
  return out;
}

BigRational hermite_number(unsigned m) {
  if (m % 2 == 1) return 0;
  const unsigned s = m / 2;
  BigRational c(factorial(m), factorial(s));
  c.canonicalize();
  return s % 2 == 1 ? BigRational(-c) : c;
}

cplx hermite_2v(unsigned m, cplx z1, cplx z2) { return dhp_2v_xi(m, z1, z2, 1.0); }

RationalMPoly hermite_2v_exact(unsigned m) {
  RationalMPoly out;
  for (unsigned s = 0; 2 * s <= m; ++s) {
    BigRational c(factorial(m), factorial(s) * factorial(m - 2 * s));
    c.canonicalize();
    out += RationalMPoly::monomial(c, exps(m - 2 * s, s));
  }
  return out;
}

cplx dhp_2v_xi(unsigned m, cplx z1, cplx z2, cplx xi) {
  cplx sum{};
  for (unsigned s = 0; 2 * s <= m; ++s) {
    const double c = coeff_d(factorial(m), factorial(s) * factorial(m - 2 * s));
    sum += c * ipow(xi, m - s) * ipow(z1, m - 2 * s) * ipow(z2, s);
  }
  return sum;
}

cplx dhp_2v(unsigned m, cplx z1, cplx z2, const DegenerateParam& p) {
  return dhp_2v_xi(m, z1, z2, p.xi);
}

std::vector<cplx> dhp_2v_sequence(unsigned mmax, cplx z1, cplx z2, cplx xi) {
  std::vector<cplx> h(mmax + 1);
  h[0] = 1.0;
  if (mmax >= 1) h[1] = xi * z1;
  for (unsigned m = 1; m < mmax; ++m) {
    h[m + 1] = xi * z1 * h[m] + 2.0 * xi * z2 * static_cast<double>(m) * h[m - 1];
  }
  return h;
}

RationalMPoly dhp_2v_exact(unsigned m) {
  RationalMPoly out;
  for (unsigned s = 0; 2 * s <= m; ++s) {
    BigRational c(factorial(m), factorial(s) * factorial(m - 2 * s));
    c.canonicalize();
    out += RationalMPoly::monomial(c, exps(m - 2 * s, s, m - s));
  }
  return out;
}

cplx dhp_1v(unsigned m, cplx z1, const DegenerateParam& p) { return dhp_2v_xi(m, z1, -0.5, p.xi); }

RationalMPoly dhp_1v_exact(unsigned m) {
  return poly_substitute(dhp_2v_exact(m), Var::z2, RationalMPoly(make_rational(-1, 2)));
}

RationalMPoly dhp_special_value(unsigned m, SpecialValue which) {
  switch (which) {
    case SpecialValue::Z1Zero: {
      if (m % 2 == 1) return {};
      const unsigned r = m / 2;
      BigRational c(factorial(m), factorial(r));
      c.canonicalize();
      return RationalMPoly::monomial(c, exps(0, r, r));
    }
    case SpecialValue::Z2Zero:
      return RationalMPoly::monomial(1, exps(m, 0, m));
    case SpecialValue::DZ1AtZ1Zero: {
      if (m % 2 == 0) return {};
      const unsigned r = (m - 1) / 2;
      BigRational c(factorial(m), factorial(r));
      c.canonicalize();
      return RationalMPoly::monomial(c, exps(0, r, r + 1));
    }
  }
  throw std::invalid_argument("dhp_special_value: unknown case");
}

cplx laguerre_gen(unsigned n, cplx alpha, cplx x) {
  cplx sum{};
  cplx xk = 1.0;  // x^k / k!
  for (unsigned k = 0; k <= n; ++k) {
    // binom(n+alpha, n-k) = falling(n+alpha, n-k) / (n-k)!
    cplx falling = 1.0;
    const cplx top = static_cast<double>(n) + alpha;
    for (unsigned i = 0; i < n - k; ++i) {
      falling *= top - static_cast<double>(i);
    }
    const cplx term = falling * inv_factorial_d(n - k) * xk;
    sum += (k % 2 == 0) ? term : -term;
    xk *= x / static_cast<double>(k + 1);
  }
  return sum;
}

cplx confluent_1f1(cplx a, cplx c, cplx x, double tol) {
  const bool terminating = is_nonpositive_integer(a);
  if (is_nonpositive_integer(c)) {
    if (!terminating || -a.real() > -c.real()) {
      throw std::domain_error("confluent_1f1: denominator parameter hits zero before the series ends");
    }
  }
  cplx sum = 1.0;
  cplx term = 1.0;
  if (terminating) {
    const auto n = static_cast<unsigned>(-a.real());
    for (unsigned k = 0; k < n; ++k) {
      term *= (a + static_cast<double>(k)) / (c + static_cast<double>(k)) * x / static_cast<double>(k + 1);
      sum += term;
    }
    return sum;
  }
  for (unsigned k = 0; k < 100000; ++k) {
    term *= (a + static_cast<double>(k)) / (c + static_cast<double>(k)) * x / static_cast<double>(k + 1);
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum) && static_cast<double>(k) > std::abs(x)) {
      return sum;
    }
  }
  throw std::runtime_error("confluent_1f1: series did not converge");
}

cplx lauricella_f111(unsigned l, unsigned r, cplx x1, cplx x2) {
  if (l > r) {
    throw std::invalid_argument("lauricella_f111: requires l <= r");
  }
  const BigInteger top = factorial(l) * factorial(r - l);
  cplx sum{};
  for (unsigned s = 0; 2 * s <= l; ++s) {
    for (unsigned k = 0; 2 * s + k <= l; ++k) {
      const unsigned n = 2 * s + k;
      const BigInteger den = factorial(r - l + n) * factorial(l - n) * factorial(s) * factorial(k);
      const cplx term = coeff_d(top, den) * ipow(x1, s) * ipow(-x2, k);
      sum += term;
    }
  }
  return sum;
}

cplx lauricella_f111_pochhammer(unsigned l, unsigned r, cplx x1, cplx x2) {
  if (l > r) {
    throw std::invalid_argument("lauricella_f111_pochhammer: requires l <= r");
  }
  // (-l)_n / (r-l+1)_n built incrementally; zero once n > l.
  std::vector<BigRational> ratio{BigRational(1)};
  for (unsigned n = 1; n <= l; ++n) {
    BigRational next = ratio.back() * BigRational(static_cast<long>(n) - 1 - static_cast<long>(l)) /
                       BigRational(static_cast<long>(r - l + n));
    ratio.push_back(next);
  }
  cplx sum{};
  for (unsigned s = 0; 2 * s <= l; ++s) {
    for (unsigned k = 0; 2 * s + k <= l; ++k) {
      BigRational c = ratio[2 * s + k] / (factorial(s) * factorial(k));
      sum += c.get_d() * ipow(x1, s) * ipow(x2, k);
    }
  }
  return sum;
}

LauricellaShape lauricella_matrix_element_shape() {
  LauricellaShape s;
  s.v = {2};
  s.phi = {1};
  s.psi = {1};
  s.psi_prime = {1};
  s.delta = {2};
  s.eps = {1};
  s.eta = {1};
  s.eta_prime = {1};
  return s;
}

bool lauricella_convergence_ok(const LauricellaShape& shape) {
  auto sum = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  };
  const double d1 = 1.0 + sum(shape.delta) + sum(shape.eta) - sum(shape.v) - sum(shape.psi);
  const double d2 = 1.0 + sum(shape.eps) + sum(shape.eta_prime) - sum(shape.phi) - sum(shape.psi_prime);
  return d1 > 0.0 && d2 > 0.0;
}

}  // namespace dhermite
