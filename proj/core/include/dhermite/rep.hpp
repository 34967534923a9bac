#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dhermite/lie.hpp"
#include "dhermite/mpoly.hpp"
#include "dhermite/polys.hpp"
#include "dhermite/series.hpp"

namespace dhermite {

/// (omega, mu) labelling the multiplier representation; mu must be nonzero.
class RepParams {
 public:
  RepParams() = default;
  RepParams(cplx omega, cplx mu);

  cplx omega() const noexcept { return omega_; }
  cplx mu() const noexcept { return mu_; }

 private:
  cplx omega_{0.0};
  cplx mu_{1.0};
};

/// [B(g) f](z) = exp(mu(q z^2 + beta z + alpha) - omega delta) f(e^delta z + e^delta gamma),
/// truncated to the order of f. f is read as a polynomial.
ComplexSeries multiplier_action(const GroupElement& g, const RepParams& rp, const ComplexSeries& f);

/// Coefficients of z^0..z^lmax in exp(mu(qz^2+beta z+alpha) + (r-omega)delta)(z+gamma)^r.
std::vector<cplx> matrix_elements_oracle(const GroupElement& g, const RepParams& rp, unsigned r,
                                         unsigned lmax);

// Closed forms of A_lr(g). All include the factor exp(mu alpha + (r-omega) delta).

/// Terminating Lauricella form; r >= l, and gamma != 0 unless l == r.
cplx matrix_element_lauricella(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// Double sum over (s, k) for r >= l; gamma = 0 is handled termwise.
cplx matrix_element_upper_sum(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// Double sum over (j, s) for l >= r.
cplx matrix_element_lower_sum(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// Hermite form for l >= r; needs q != 0. Independent of the square-root branch.
cplx matrix_element_hermite(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r,
                            bool flip_branch = false);
/// q = 0: gamma^{r-l} L_l^{(r-l)}(-mu beta gamma), any l, r.
cplx matrix_element_laguerre(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// q = 0 through 1F1: the r >= l form and the gamma-free l >= r form.
cplx matrix_element_laguerre_1f1(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// alpha = beta = delta = 0: sum over j of gamma^{r-l+2j}(mu q)^j r!/(j!(2j+r-l)!(l-2j)!).
cplx matrix_element_q_gamma(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// Same sum with the non-factorial (l-2j) in the denominator, summed where it
/// is defined (0 <= 2j < l, 2j+r-l >= 0). Kept to measure that variant.
cplx matrix_element_q_gamma_printed(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);
/// alpha = gamma = delta = 0: 0 for l < r, Hermite form for l >= r.
cplx matrix_element_q_beta(const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);

enum class MatrixMethod {
  Lauricella,
  Hermite,
  UpperSum,
  LowerSum,
  Laguerre,
  QGamma,
  QBeta,
  Oracle,
};

std::string_view method_tag(MatrixMethod m);
std::optional<MatrixMethod> parse_method(std::string_view tag);

/// Evaluates one closed form; throws std::domain_error when (g, l, r) is
/// outside the form's regime.
cplx matrix_element(MatrixMethod m, const GroupElement& g, const RepParams& rp, unsigned l, unsigned r);

/// Every closed form whose regime contains (g, l, r).
std::vector<MatrixMethod> applicable_methods(const GroupElement& g, unsigned l, unsigned r);

/// The form a table cell uses: the special regimes first, then the double sums.
MatrixMethod preferred_method(const GroupElement& g, unsigned l, unsigned r);

struct MatrixElementCell {
  unsigned l = 0, r = 0;
  MatrixMethod method = MatrixMethod::Oracle;
  cplx value{};
  cplx oracle{};
  double rel_err = 0.0;
};

struct MatrixElementTable {
  unsigned lmax = 0, rmax = 0;
  std::vector<MatrixElementCell> cells;  // row-major in r, then l
  double max_rel_err = 0.0;
};

MatrixElementTable build_matrix_element_table(const GroupElement& g, const RepParams& rp,
                                              unsigned lmax, unsigned rmax);

/// |a-b| / max(|a|,|b|), 0 when both vanish.
double relative_difference(cplx a, cplx b);

// Differential-operator model on polynomials in (z1, z2, xi, t).

enum class LadderOp { Jplus, Jminus, J3, E, Q };

std::string_view ladder_name(LadderOp op);

/// Exact action. Jminus throws std::domain_error when the result would leave
/// the polynomial span (a term not divisible by xi t after the derivative).
RationalMPoly operator_apply(LadderOp op, const RationalMPoly& p);

/// H_m(z1, z2 | tau) t^m with xi symbolic.
RationalMPoly basis_vector(unsigned m);

// One-parameter actions on analytic functions f(z1, z2 | tau; t).

struct FunctionPoint {
  cplx z1{}, z2{}, xi{1.0}, t{};
};

using AnalyticFunction = std::function<cplx(const FunctionPoint&)>;

/// exp(param * X) applied to f, X one of the five operators.
AnalyticFunction one_param_transform(LadderOp op, cplx param, AnalyticFunction f);

/// Evaluates exp(param X) f at a point. For Q, |4 xi z2 param t^2| < 1 is
/// required, otherwise std::domain_error.
cplx one_param_action(LadderOp op, cplx param, const AnalyticFunction& f, const FunctionPoint& p);

/// U(g) applied to H_r t^r, divided by t^r, in closed form:
///   e^{alpha + r delta} W^{-(r+1)/2} exp(xi(beta^2 z2 t^2 + beta z1 t)/W + xi^2 q t^2 z1^2 / W)
///   * H_r(W^{-1/2}(z1 + 2 z2 beta t) + gamma W^{1/2}/(xi t), z2 | tau),   W = 1 - 4 xi z2 q t^2.
/// Equals sum_l A_lr(g) H_l t^{l-r} with mu = 1, omega = 0.
cplx composite_action_U(const GroupElement& g, unsigned r, const FunctionPoint& p);

/// Same quantity from the five one-parameter transforms applied in turn,
/// using ordered_factors(g).
cplx composite_action_sequential(const GroupElement& g, unsigned r, const FunctionPoint& p);

}  // namespace dhermite
