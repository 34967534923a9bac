#include "dhermite/rep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ipow.hpp"

namespace dhermite {

using detail::ipow;

namespace {

const cplx kZero{};

cplx prefactor(const GroupElement& g, const RepParams& rp, unsigned r) {
  return std::exp(rp.mu() * g.alpha + (static_cast<double>(r) - rp.omega()) * g.delta);
}

double fact_d(unsigned n) { return ratio_to_double(factorial(n), BigInteger(1)); }

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

constexpr std::array<std::pair<MatrixMethod, std::string_view>, 8> kMethodTags = {{
    {MatrixMethod::Lauricella, "lauricella_hpeq17"},
    {MatrixMethod::Hermite, "hermite_hpeq85"},
    {MatrixMethod::UpperSum, "doublesum_hpeq21"},
    {MatrixMethod::LowerSum, "doublesum_hpeq82"},
    {MatrixMethod::Laguerre, "laguerre_hpeq66"},
    {MatrixMethod::QGamma, "qonly_hpeq68"},
    {MatrixMethod::QBeta, "betaq_hpeq69"},
    {MatrixMethod::Oracle, "oracle"},
}};

bool lauricella_ok(const GroupElement& g, unsigned l, unsigned r) {
  return r >= l && (g.gamma != kZero || l == r);
}
bool hermite_ok(const GroupElement& g, unsigned l, unsigned r) { return l >= r && g.q != kZero; }
bool laguerre_ok(const GroupElement& g) { return g.q == kZero; }
bool q_gamma_ok(const GroupElement& g) {
  return g.alpha == kZero && g.beta == kZero && g.delta == kZero;
}
bool q_beta_ok(const GroupElement& g) {
  return g.alpha == kZero && g.gamma == kZero && g.delta == kZero;
}

}  // namespace

RepParams::RepParams(cplx omega, cplx mu) : omega_(omega), mu_(mu) {
  if (mu == kZero) {
    throw std::invalid_argument("RepParams: mu must be nonzero");
  }
}

ComplexSeries multiplier_action(const GroupElement& g, const RepParams& rp, const ComplexSeries& f) {
  const std::size_t n = f.order();
  ComplexSeries arg(n);
  arg.at(0) = rp.mu() * g.alpha - rp.omega() * g.delta;
  if (n >= 1) arg.at(1) = rp.mu() * g.beta;
  if (n >= 2) arg.at(2) = rp.mu() * g.q;
  const cplx ed = std::exp(g.delta);
  return series_mul(series_exp(arg), series_compose_affine(f, ed, ed * g.gamma));
}

std::vector<cplx> matrix_elements_oracle(const GroupElement& g, const RepParams& rp, unsigned r,
                                         unsigned lmax) {
  ComplexSeries arg(lmax);
  arg.at(0) = rp.mu() * g.alpha + (static_cast<double>(r) - rp.omega()) * g.delta;
  if (lmax >= 1) arg.at(1) = rp.mu() * g.beta;
  if (lmax >= 2) arg.at(2) = rp.mu() * g.q;
  const ComplexSeries binom = series_pow_int(ComplexSeries::linear(g.gamma, 1.0, lmax), r);
  return series_mul(series_exp(arg), binom).coeffs();
}

cplx matrix_element_lauricella(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(lauricella_ok(g, l, r), "lauricella form needs r >= l and gamma != 0 off the diagonal");
  const cplx mu = rp.mu();
  const double c = ratio_to_double(factorial(r), factorial(r - l) * factorial(l));
  const cplx f = lauricella_f111(l, r, mu * g.q * g.gamma * g.gamma, -mu * g.beta * g.gamma);
  return prefactor(g, rp, r) * ipow(g.gamma, r - l) * c * f;
}

cplx matrix_element_upper_sum(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(r >= l, "upper double sum needs r >= l");
  const cplx mq = rp.mu() * g.q;
  const cplx mb = rp.mu() * g.beta;
  const double rf = fact_d(r);
  cplx sum{};
  for (unsigned s = 0; 2 * s <= l; ++s) {
    for (unsigned k = 0; 2 * s + k <= l; ++k) {
      const unsigned n = 2 * s + k;
      const double c = rf * inv_factorial_d(l - n) * inv_factorial_d(r - l + n) * inv_factorial_d(s) *
                       inv_factorial_d(k);
      sum += c * ipow(g.gamma, r - l + n) * ipow(mq, s) * ipow(mb, k);
    }
  }
  return prefactor(g, rp, r) * sum;
}

cplx matrix_element_lower_sum(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(l >= r, "lower double sum needs l >= r");
  const cplx mq = rp.mu() * g.q;
  const cplx mb = rp.mu() * g.beta;
  const double rf = fact_d(r);
  cplx sum{};
  for (unsigned j = 0; j <= r; ++j) {
    const unsigned n = l - r + j;
    cplx inner{};
    for (unsigned s = 0; 2 * s <= n; ++s) {
      inner += inv_factorial_d(n - 2 * s) * inv_factorial_d(s) * ipow(mq, s) * ipow(mb, n - 2 * s);
    }
    sum += rf * inv_factorial_d(r - j) * inv_factorial_d(j) * ipow(g.gamma, j) * inner;
  }
  return prefactor(g, rp, r) * sum;
}

cplx matrix_element_hermite(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r,
                            bool flip_branch) {
  require(hermite_ok(g, l, r), "hermite form needs l >= r and q != 0");
  cplx sigma = std::sqrt(-rp.mu() * g.q);
  if (flip_branch) sigma = -sigma;
  const cplx x = rp.mu() * g.beta / (2.0 * sigma);
  const double rf = fact_d(r);
  cplx sum{};
  for (unsigned j = 0; j <= r; ++j) {
    const unsigned n = l - r + j;
    const cplx h = ipow(sigma, n) * hermite_classical(n, x) * inv_factorial_d(n);
    sum += rf * inv_factorial_d(r - j) * inv_factorial_d(j) * ipow(g.gamma, j) * h;
  }
  return prefactor(g, rp, r) * sum;
}

cplx matrix_element_laguerre(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(laguerre_ok(g), "laguerre form needs q = 0");
  const cplx mb = rp.mu() * g.beta;
  if (g.gamma == kZero) {
    // gamma^{r-l} L_l^{(r-l)}(0 * gamma) in the limit: only the top term survives.
    if (l < r) return 0.0;
    return prefactor(g, rp, r) * ipow(mb, l - r) * inv_factorial_d(l - r);
  }
  const int shift = static_cast<int>(r) - static_cast<int>(l);
  return prefactor(g, rp, r) * ipow(g.gamma, shift) *
         laguerre_gen(l, static_cast<double>(shift), -mb * g.gamma);
}

cplx matrix_element_laguerre_1f1(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(laguerre_ok(g), "laguerre form needs q = 0");
  const cplx mb = rp.mu() * g.beta;
  const cplx x = -mb * g.gamma;
  if (r >= l) {
    const double c = ratio_to_double(factorial(r), factorial(l) * factorial(r - l));
    return prefactor(g, rp, r) * ipow(g.gamma, r - l) * c *
           confluent_1f1(-static_cast<double>(l), static_cast<double>(r - l + 1), x);
  }
  return prefactor(g, rp, r) * ipow(mb, l - r) * inv_factorial_d(l - r) *
         confluent_1f1(-static_cast<double>(r), static_cast<double>(l - r + 1), x);
}

cplx matrix_element_q_gamma(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(q_gamma_ok(g), "q-gamma form needs alpha = beta = delta = 0");
  const cplx mq = rp.mu() * g.q;
  const double rf = fact_d(r);
  cplx sum{};
  for (unsigned j = 0; 2 * j <= l; ++j) {
    if (2 * j + r < l) continue;
    const double c = rf * inv_factorial_d(j) * inv_factorial_d(2 * j + r - l) * inv_factorial_d(l - 2 * j);
    sum += c * ipow(g.gamma, r + 2 * j - l) * ipow(mq, j);
  }
  return prefactor(g, rp, r) * sum;
}

cplx matrix_element_q_gamma_printed(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  const cplx mq = rp.mu() * g.q;
  const double rf = fact_d(r);
  cplx sum{};
  for (unsigned j = 0; 2 * j < l; ++j) {
    if (2 * j + r < l) continue;
    const double c = rf * inv_factorial_d(j) * inv_factorial_d(2 * j + r - l) / static_cast<double>(l - 2 * j);
    sum += c * ipow(g.gamma, r + 2 * j - l) * ipow(mq, j);
  }
  return prefactor(g, rp, r) * sum;
}

cplx matrix_element_q_beta(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  require(q_beta_ok(g), "q-beta form needs alpha = gamma = delta = 0");
  if (l < r) return 0.0;
  const unsigned n = l - r;
  const cplx mq = rp.mu() * g.q;
  const cplx mb = rp.mu() * g.beta;
  cplx sum{};
  for (unsigned s = 0; 2 * s <= n; ++s) {
    sum += inv_factorial_d(s) * inv_factorial_d(n - 2 * s) * ipow(mq, s) * ipow(mb, n - 2 * s);
  }
  return prefactor(g, rp, r) * sum;
}

std::string_view method_tag(MatrixMethod m) {
  for (const auto& [meth, tag] : kMethodTags) {
    if (meth == m) return tag;
  }
  return "?";
}

std::optional<MatrixMethod> parse_method(std::string_view tag) {
  for (const auto& [meth, t] : kMethodTags) {
    if (t == tag) return meth;
  }
  return std::nullopt;
}

cplx matrix_element(MatrixMethod m, const GroupElement& g, const RepParams& rp, unsigned l, unsigned r) {
  switch (m) {
    case MatrixMethod::Lauricella: return matrix_element_lauricella(g, rp, l, r);
    case MatrixMethod::Hermite: return matrix_element_hermite(g, rp, l, r);
    case MatrixMethod::UpperSum: return matrix_element_upper_sum(g, rp, l, r);
    case MatrixMethod::LowerSum: return matrix_element_lower_sum(g, rp, l, r);
    case MatrixMethod::Laguerre: return matrix_element_laguerre(g, rp, l, r);
    case MatrixMethod::QGamma: return matrix_element_q_gamma(g, rp, l, r);
    case MatrixMethod::QBeta: return matrix_element_q_beta(g, rp, l, r);
    case MatrixMethod::Oracle: return matrix_elements_oracle(g, rp, r, l)[l];
  }
  throw std::invalid_argument("matrix_element: unknown method");
}

std::vector<MatrixMethod> applicable_methods(const GroupElement& g, unsigned l, unsigned r) {
  std::vector<MatrixMethod> out;
  if (lauricella_ok(g, l, r)) out.push_back(MatrixMethod::Lauricella);
  if (hermite_ok(g, l, r)) out.push_back(MatrixMethod::Hermite);
  if (r >= l) out.push_back(MatrixMethod::UpperSum);
  if (l >= r) out.push_back(MatrixMethod::LowerSum);
  if (laguerre_ok(g)) out.push_back(MatrixMethod::Laguerre);
  if (q_gamma_ok(g)) out.push_back(MatrixMethod::QGamma);
  if (q_beta_ok(g)) out.push_back(MatrixMethod::QBeta);
  return out;
}

MatrixMethod preferred_method(const GroupElement& g, unsigned l, unsigned r) {
  if (laguerre_ok(g)) return MatrixMethod::Laguerre;
  if (q_gamma_ok(g)) return MatrixMethod::QGamma;
  if (q_beta_ok(g)) return MatrixMethod::QBeta;
  return r >= l ? MatrixMethod::UpperSum : MatrixMethod::LowerSum;
}

double relative_difference(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

MatrixElementTable build_matrix_element_table(const GroupElement& g, const RepParams& rp,
                                              unsigned lmax, unsigned rmax) {
  MatrixElementTable table;
  table.lmax = lmax;
  table.rmax = rmax;
  for (unsigned r = 0; r <= rmax; ++r) {
    const auto column = matrix_elements_oracle(g, rp, r, lmax);
    for (unsigned l = 0; l <= lmax; ++l) {
      MatrixElementCell cell;
      cell.l = l;
      cell.r = r;
      cell.method = preferred_method(g, l, r);
      cell.value = matrix_element(cell.method, g, rp, l, r);
      cell.oracle = column[l];
      cell.rel_err = relative_difference(cell.value, cell.oracle);
      table.max_rel_err = std::max(table.max_rel_err, cell.rel_err);
      table.cells.push_back(cell);
    }
  }
  return table;
}

std::string_view ladder_name(LadderOp op) {
  switch (op) {
    case LadderOp::Jplus: return "J+";
    case LadderOp::Jminus: return "J-";
    case LadderOp::J3: return "J3";
    case LadderOp::E: return "E";
    case LadderOp::Q: return "Q";
  }
  return "?";
}

RationalMPoly operator_apply(LadderOp op, const RationalMPoly& p) {
  using P = RationalMPoly;
  static const P z1 = P::variable(Var::z1);
  static const P z2 = P::variable(Var::z2);
  static const P xi = P::variable(Var::xi);
  static const P t = P::variable(Var::t);
  switch (op) {
    case LadderOp::Jplus:
      return P(2) * z2 * t * poly_diff(p, Var::z1) + xi * z1 * t * p;
    case LadderOp::Jminus:
      return poly_divide_monomial(poly_diff(p, Var::z1), Exponents{0, 0, 1, 1, 0});
    case LadderOp::J3:
      return t * poly_diff(p, Var::t);
    case LadderOp::E:
      return p;
    case LadderOp::Q: {
      const P t2 = t * t;
      return P(2) * xi * z1 * z2 * t2 * poly_diff(p, Var::z1) +
             P(2) * xi * z2 * t2 * t * poly_diff(p, Var::t) +
             xi * (xi * z1 * z1 + P(2) * z2) * t2 * p;
    }
  }
  throw std::invalid_argument("operator_apply: unknown operator");
}

RationalMPoly basis_vector(unsigned m) {
  return dhp_2v_exact(m) * RationalMPoly::variable(Var::t, m);
}

AnalyticFunction one_param_transform(LadderOp op, cplx param, AnalyticFunction f) {
  switch (op) {
    case LadderOp::Jplus:
      return [param, f = std::move(f)](const FunctionPoint& p) {
        FunctionPoint s = p;
        s.z1 = p.z1 + 2.0 * p.z2 * param * p.t;
        return std::exp(p.xi * (param * param * p.z2 * p.t * p.t + param * p.z1 * p.t)) * f(s);
      };
    case LadderOp::Jminus:
      return [param, f = std::move(f)](const FunctionPoint& p) {
        if (p.t == kZero && param != kZero) {
          throw std::domain_error("exp(gamma J-): t must be nonzero");
        }
        FunctionPoint s = p;
        if (param != kZero) s.z1 = p.z1 + param / (p.xi * p.t);
        return f(s);
      };
    case LadderOp::J3:
      return [param, f = std::move(f)](const FunctionPoint& p) {
        FunctionPoint s = p;
        s.t = p.t * std::exp(param);
        return f(s);
      };
    case LadderOp::E:
      return [param, f = std::move(f)](const FunctionPoint& p) { return std::exp(param) * f(p); };
    case LadderOp::Q:
      return [param, f = std::move(f)](const FunctionPoint& p) {
        const cplx u = 4.0 * p.xi * p.z2 * param * p.t * p.t;
        if (std::abs(u) >= 1.0) {
          throw std::domain_error("exp(q Q): |4 xi z2 q t^2| must be below 1");
        }
        const cplx w = 1.0 - u;
        const cplx w_mhalf = 1.0 / std::sqrt(w);
        FunctionPoint s = p;
        s.z1 = p.z1 * w_mhalf;
        s.t = p.t * w_mhalf;
        // xi z1^2/(4 z2) (1/W - 1) rewritten without the division by z2.
        const cplx expo = p.xi * p.xi * param * p.t * p.t * p.z1 * p.z1 / w;
        return w_mhalf * std::exp(expo) * f(s);
      };
  }
  throw std::invalid_argument("one_param_transform: unknown operator");
}

cplx one_param_action(LadderOp op, cplx param, const AnalyticFunction& f, const FunctionPoint& p) {
  return one_param_transform(op, param, f)(p);
}

cplx composite_action_U(const GroupElement& g, unsigned r, const FunctionPoint& p) {
  const cplx u = 4.0 * p.xi * p.z2 * g.q * p.t * p.t;
  if (std::abs(u) >= 1.0) {
    throw std::domain_error("composite_action_U: |4 xi z2 q t^2| must be below 1");
  }
  if (p.t == kZero && g.gamma != kZero) {
    throw std::domain_error("composite_action_U: t must be nonzero when gamma != 0");
  }
  const cplx w = 1.0 - u;
  const cplx w_mhalf = 1.0 / std::sqrt(w);
  const cplx b = g.beta;
  const cplx expo = g.alpha + static_cast<double>(r) * g.delta +
                    p.xi * (b * b * p.z2 * p.t * p.t + b * p.z1 * p.t) / w +
                    p.xi * p.xi * g.q * p.t * p.t * p.z1 * p.z1 / w;
  cplx arg = w_mhalf * (p.z1 + 2.0 * p.z2 * b * p.t);
  if (g.gamma != kZero) arg += g.gamma / (w_mhalf * p.xi * p.t);
  return ipow(w_mhalf, r + 1) * std::exp(expo) * dhp_2v_xi(r, arg, p.z2, p.xi);
}

cplx composite_action_sequential(const GroupElement& g, unsigned r, const FunctionPoint& p) {
  if (p.t == kZero) {
    throw std::domain_error("composite_action_sequential: t must be nonzero");
  }
  const OrderedFactors f = ordered_factors(g);
  AnalyticFunction basis = [r](const FunctionPoint& x) {
    return dhp_2v_xi(r, x.z1, x.z2, x.xi) * ipow(x.t, r);
  };
  AnalyticFunction u = one_param_transform(LadderOp::Q, f.q, std::move(basis));
  u = one_param_transform(LadderOp::E, f.alpha, std::move(u));
  u = one_param_transform(LadderOp::J3, f.delta, std::move(u));
  u = one_param_transform(LadderOp::Jminus, f.gamma, std::move(u));
  u = one_param_transform(LadderOp::Jplus, f.beta, std::move(u));
  return u(p) / ipow(p.t, r);
}

}  // namespace dhermite
