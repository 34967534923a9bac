// Randomized series checks: U(g) H_r t^r against sum_l A_lr(g) H_l t^{l-r}
// for the general expansion and its restricted special cases, the generating
// function, the sequential composite and the matrix-element cross-check.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "dhermite/polys.hpp"
#include "harness_internal.hpp"
#include "ipow.hpp"

namespace dhermite {

using detail::ipow;
using detail::ReportBuilder;
using nlohmann::json;

namespace {

enum class Regime { General, QZero, BetaZero, GammaZero };
enum class Coeff { Lauricella, Hermite, Laguerre, QGamma, QBeta };
enum class PrintedLhs { Generic, BetaXiQ };

struct ExpansionDef {
  std::string base;
  std::string paper_eq;
  Regime regime;
  Coeff coeff;
  std::optional<double> z2;
  std::optional<double> q;
  std::optional<double> tau;
  std::optional<unsigned> r;
  double tmin = 0.05, tmax = 0.3;
  PrintedLhs printed_lhs = PrintedLhs::Generic;
  bool printed_coeff = false;  // non-factorial q-gamma coefficient
  bool printed_shift = false;  // H_{l-r} in place of H_l on the right
};

const std::vector<ExpansionDef>& expansion_defs() {
  using R = Regime;
  using C = Coeff;
  static const std::vector<ExpansionDef> defs = [] {
    std::vector<ExpansionDef> d;
    auto add = [&d](ExpansionDef e) { d.push_back(std::move(e)); };
    add({"expansion.lauricella", "hpeq25", R::General, C::Lauricella, {}, {}, {}, {}});
    add({"expansion.hermite", "hpeq160", R::General, C::Hermite, {}, {}, {}, {}});
    add({"expansion.laguerre", "hpeq30", R::QZero, C::Laguerre, {}, {}, {}, {}, 0.05, 0.25});
    add({"expansion.qgamma", "hpeq34", R::BetaZero, C::QGamma, {}, {}, {}, {}, 0.05, 0.3, PrintedLhs::Generic, true});
    add({"expansion.qbeta", "hpeq32", R::GammaZero, C::QBeta, {}, {}, {}, {}, 0.05, 0.3, PrintedLhs::Generic, false,
         true});
    add({"dhp1.laguerre", "hpeq37", R::QZero, C::Laguerre, -0.5, {}, {}, {}, 0.05, 0.25});
    add({"dhp1.qgamma", "hpeq39", R::BetaZero, C::QGamma, -0.5, {}, {}, {}, 0.05, 0.3, PrintedLhs::Generic, true});
    add({"dhp1.qbeta", "hpeq38", R::GammaZero, C::QBeta, -0.5, {}, {}, {}, 0.05, 0.3, PrintedLhs::BetaXiQ, false,
         true});
    add({"qhalf.qgamma", "hpeq42", R::BetaZero, C::QGamma, {}, -0.5, {}, {}, 0.05, 0.3, PrintedLhs::Generic, true});
    add({"qhalf.qbeta", "hpeq40", R::GammaZero, C::QBeta, {}, -0.5, {}, {}, 0.05, 0.3, PrintedLhs::Generic, false,
         true});
    add({"mehler", "hpeq41", R::GammaZero, C::QBeta, {}, -0.5, {}, 0u, 0.05, 0.2});
    add({"hermite2v.laguerre", "hpeq43", R::QZero, C::Laguerre, {}, {}, 0.0, {}, 0.05, 0.25});
    add({"hermite2v.qgamma", "hpeq45", R::BetaZero, C::QGamma, {}, {}, 0.0, {}, 0.05, 0.3, PrintedLhs::Generic, true});
    add({"hermite2v.qbeta", "hpeq44", R::GammaZero, C::QBeta, {}, {}, 0.0, {}, 0.05, 0.3, PrintedLhs::Generic, false,
         true});
    return d;
  }();
  return defs;
}

std::string_view strip_printed(std::string_view id) {
  constexpr std::string_view suffix = ".printed";
  if (id.ends_with(suffix)) id.remove_suffix(suffix.size());
  return id;
}

const ExpansionDef* find_def(std::string_view id) {
  const auto base = strip_printed(id);
  for (const auto& d : expansion_defs()) {
    if (d.base == base) return &d;
  }
  return nullptr;
}

ExpansionSample draw_sample(const ExpansionDef& def, std::uint64_t seed, unsigned trial) {
  static constexpr double kTaus[] = {-0.5, 0.5, 1.0};
  detail::Rng rng(seed, def.base + "#" + std::to_string(trial));
  for (;;) {
    ExpansionSample s;
    s.tau = def.tau ? *def.tau : kTaus[rng.below(3)];
    s.point.xi = xi_of_tau(s.tau);
    s.point.z1 = rng.uniform(-1.0, 1.0);
    s.point.z2 = def.z2 ? *def.z2 : rng.uniform(-1.0, 1.0);
    const double t = rng.uniform(def.tmin, def.tmax);
    s.point.t = rng.uniform() < 0.5 ? -t : t;
    s.r = def.r ? *def.r : rng.below(5);
    s.g.q = def.q ? cplx(*def.q) : rng.complex_box(0.35);
    s.g.beta = rng.complex_box(0.35);
    s.g.gamma = rng.complex_box(0.35);
    switch (def.regime) {
      case Regime::General: break;
      case Regime::QZero: s.g.q = 0.0; break;
      case Regime::BetaZero: s.g.beta = 0.0; break;
      case Regime::GammaZero: s.g.gamma = 0.0; break;
    }
    if (std::abs(4.0 * s.point.xi * s.point.z2 * s.g.q * s.point.t * s.point.t) < 0.8) return s;
  }
}

json sample_json(const ExpansionSample& s) {
  return {{"r", s.r},
          {"tau", detail::round15(s.tau)},
          {"z1", detail::complex_json(s.point.z1)},
          {"z2", detail::complex_json(s.point.z2)},
          {"t", detail::complex_json(s.point.t)},
          {"q", detail::complex_json(s.g.q)},
          {"beta", detail::complex_json(s.g.beta)},
          {"gamma", detail::complex_json(s.g.gamma)}};
}

// The closed left side as printed, before the corrections to the J- shift and
// to the beta terms.
cplx printed_lhs(const ExpansionDef& def, const ExpansionSample& s) {
  const auto& p = s.point;
  const auto& g = s.g;
  const cplx w = 1.0 - 4.0 * p.xi * p.z2 * g.q * p.t * p.t;
  const cplx t2 = p.t * p.t;
  cplx expo = g.alpha + static_cast<double>(s.r) * g.delta + p.xi * (g.beta * g.beta * p.z2 * t2 + g.beta * p.z1 * p.t);
  if (def.printed_lhs == PrintedLhs::BetaXiQ) {
    expo += g.beta * p.xi * g.q * t2 * p.z1 * p.z1 / w;
  } else {
    expo += p.xi * p.xi * g.q * t2 * p.z1 * p.z1 / w;
  }
  const cplx arg = (p.z1 + 2.0 * p.z2 * g.beta * p.t + g.gamma / p.t * w) / std::sqrt(w);
  return std::pow(w, -0.5 * (s.r + 1.0)) * std::exp(expo) * dhp_2v_xi(s.r, arg, p.z2, p.xi);
}

struct Coefficient {
  cplx value;
  double mismatch = 0.0;
};

double regime_difference(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale < 1e-14 ? std::abs(a - b) : std::abs(a - b) / scale;
}

Coefficient coefficient(const ExpansionDef& def, bool printed, const GroupElement& g, unsigned l, unsigned r) {
  const RepParams rp;
  const bool zero_gamma = g.gamma == cplx(0.0);
  switch (def.coeff) {
    case Coeff::Lauricella: {
      if (l > r) return {matrix_element_lower_sum(g, rp, l, r)};
      const cplx upper = zero_gamma && l < r ? matrix_element_upper_sum(g, rp, l, r)
                                             : matrix_element_lauricella(g, rp, l, r);
      if (l < r) return {upper};
      const cplx lower = matrix_element_lower_sum(g, rp, l, r);
      return {upper, regime_difference(upper, lower)};
    }
    case Coeff::Hermite: {
      if (l < r) return {matrix_element_upper_sum(g, rp, l, r)};
      const cplx lower = g.q == cplx(0.0) ? matrix_element_lower_sum(g, rp, l, r)
                                          : matrix_element_hermite(g, rp, l, r);
      if (l > r) return {lower};
      const cplx upper = matrix_element_upper_sum(g, rp, l, r);
      return {lower, regime_difference(lower, upper)};
    }
    case Coeff::Laguerre: return {matrix_element_laguerre(g, rp, l, r)};
    case Coeff::QGamma:
      return {printed && def.printed_coeff ? matrix_element_q_gamma_printed(g, rp, l, r)
                                           : matrix_element_q_gamma(g, rp, l, r)};
    case Coeff::QBeta: return {matrix_element_q_beta(g, rp, l, r)};
  }
  return {};
}

}  // namespace

ExpansionSample expansion_sample(std::string_view id, std::uint64_t seed, unsigned trial) {
  const ExpansionDef* def = find_def(id);
  if (def == nullptr) throw std::invalid_argument("not an expansion check: " + std::string(id));
  return draw_sample(*def, seed, trial);
}

ExpansionResidual expansion_residual(std::string_view id, const ExpansionSample& s, const SuiteOptions& o) {
  const ExpansionDef* def = find_def(id);
  if (def == nullptr) throw std::invalid_argument("not an expansion check: " + std::string(id));
  const bool printed = id.ends_with(".printed");
  const bool shift = printed && def->printed_shift;

  ExpansionResidual out;
  out.lhs = printed ? printed_lhs(*def, s) : composite_action_U(s.g, s.r, s.point);

  const unsigned cap = std::max(o.lmax_cap, o.lmax);
  const auto h = dhp_2v_sequence(cap, s.point.z1, s.point.z2, s.point.xi);
  std::vector<cplx> terms;
  double abs_sum = 0.0;
  auto extend = [&](unsigned upto) {
    for (unsigned l = static_cast<unsigned>(terms.size()); l < upto; ++l) {
      cplx term{};
      if (!(shift && l < s.r)) {
        const Coefficient c = coefficient(*def, printed, s.g, l, s.r);
        out.regime_mismatch = std::max(out.regime_mismatch, c.mismatch);
        term = c.value * h[shift ? l - s.r : l] * ipow(s.point.t, static_cast<int>(l) - static_cast<int>(s.r));
      }
      terms.push_back(term);
      abs_sum += std::abs(term);
    }
  };

  unsigned n = std::max(o.lmax, s.r + 2);
  extend(n);
  if (o.adaptive) {
    auto tail = [&] { return std::abs(terms[n - 1]) + std::abs(terms[n - 2]); };
    while (n < cap && tail() > o.tail_tol * std::max(std::abs(out.lhs), abs_sum)) {
      n = std::min(cap, n + 8);
      extend(n);
    }
  }

  // Summed smallest-first to keep the rounding independent of the tail length.
  cplx sum{};
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  out.rhs = sum;
  out.terms = n;
  out.abs_residual = std::abs(out.lhs - out.rhs);
  const double scale = std::max(std::abs(out.lhs), abs_sum);
  out.rel_residual = scale > 0.0 ? out.abs_residual / scale : out.abs_residual;
  return out;
}

ConsistencyWeb consistency_web(const SuiteOptions& options, unsigned samples) {
  ConsistencyWeb web;
  web.samples = samples;
  auto diff = [&](const char* restricted, const char* corollary) {
    double worst = 0.0;
    for (unsigned i = 0; i < samples; ++i) {
      const ExpansionSample s = expansion_sample(restricted, options.seed, i);
      const auto a = expansion_residual("expansion.lauricella", s, options);
      const auto b = expansion_residual("expansion.hermite", s, options);
      const auto c = expansion_residual(corollary, s, options);
      worst = std::max({worst, std::abs(a.rel_residual - c.rel_residual), std::abs(b.rel_residual - c.rel_residual)});
    }
    return worst;
  };
  web.max_diff_q_zero = diff("expansion.laguerre", "expansion.laguerre");
  web.max_diff_beta_zero = diff("expansion.qgamma", "expansion.qgamma");
  web.max_diff_gamma_zero = diff("expansion.qbeta", "expansion.qbeta");
  web.ok = web.max_diff_q_zero <= 1e-12 && web.max_diff_beta_zero <= 1e-12 && web.max_diff_gamma_zero <= 1e-12;
  return web;
}

namespace {

bool trial_passed(const ExpansionResidual& res, const SuiteOptions& o) {
  const bool close = res.rel_residual <= o.rel_tol || res.abs_residual <= o.abs_tol;
  return close && res.regime_mismatch <= 1e-12;
}

CheckReport run_expansion(const ExpansionDef& def, bool printed, const SuiteOptions& o) {
  const std::string id = printed ? def.base + ".printed" : def.base;
  ReportBuilder b(id, def.paper_eq);
  bool corrected_ok = true;
  for (unsigned i = 0; i < o.trials; ++i) {
    const ExpansionSample s = draw_sample(def, o.seed, i);
    const ExpansionResidual corr = expansion_residual(def.base, s, o);
    corrected_ok = corrected_ok && trial_passed(corr, o);
    const ExpansionResidual res = printed ? expansion_residual(id, s, o) : corr;
    json params = sample_json(s);
    if (res.regime_mismatch > 0.0) params["regime_mismatch"] = detail::round15(res.regime_mismatch);
    b.add_trial(res.abs_residual, res.rel_residual, trial_passed(res, o), params, res.terms);
  }
  return printed ? b.finish_printed(corrected_ok) : b.finish();
}

CheckReport genfun_check(const SuiteOptions& o) {
  static constexpr double kTaus[] = {-0.5, 0.0, 0.5, 1.0};
  ReportBuilder b("genfun", "hpeq5");
  detail::Rng rng(o.seed, "genfun");
  const unsigned n = 31;
  for (unsigned i = 0; i < o.trials; ++i) {
    const double tau = kTaus[rng.below(4)];
    const cplx xi = xi_of_tau(tau);
    const cplx z1 = rng.uniform(-1.0, 1.0);
    const cplx z2 = rng.uniform(-1.0, 1.0);
    const cplx t = rng.uniform(-0.5, 0.5);
    const auto h = dhp_2v_sequence(n - 1, z1, z2, xi);
    cplx sum{};
    double abs_sum = 0.0;
    for (unsigned m = n; m-- > 0;) {
      const cplx term = h[m] * ipow(t, m) * inv_factorial_d(m);
      sum += term;
      abs_sum += std::abs(term);
    }
    const cplx closed = tau == 0.0 ? std::exp(t * (z1 + z2 * t)) : std::pow(1.0 + tau, t * (z1 + z2 * t) / tau);
    const double abs_res = std::abs(sum - closed);
    const double rel = abs_res / std::max(std::abs(closed), abs_sum);
    b.add_trial(abs_res, rel, rel <= 1e-12 || abs_res <= 1e-12,
                {{"tau", tau}, {"z1", detail::round15(z1.real())}, {"z2", detail::round15(z2.real())},
                 {"t", detail::round15(t.real())}},
                n);
  }
  return b.finish();
}

CheckReport composite_check(const SuiteOptions& o) {
  static constexpr double kTaus[] = {-0.5, 0.0, 0.5, 1.0};
  ReportBuilder b("composite.sequential", "hpeq28");
  detail::Rng rng(o.seed, "composite.sequential");
  for (unsigned i = 0; i < o.trials; ++i) {
    GroupElement g{rng.complex_box(0.35), rng.complex_box(0.35), rng.complex_box(0.35), rng.complex_box(0.35),
                   rng.complex_box(0.35)};
    const unsigned r = rng.below(5);
    const double tau = kTaus[rng.below(4)];
    FunctionPoint p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), xi_of_tau(tau),
                    (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.05, 0.3)};
    const cplx closed = composite_action_U(g, r, p);
    const cplx seq = composite_action_sequential(g, r, p);
    const double abs_res = std::abs(closed - seq);
    const double rel = relative_difference(closed, seq);
    b.add_trial(abs_res, rel, rel <= 1e-10 || abs_res <= 1e-12,
                {{"r", r}, {"tau", tau}, {"q", detail::complex_json(g.q)}, {"alpha", detail::complex_json(g.alpha)},
                 {"beta", detail::complex_json(g.beta)}, {"gamma", detail::complex_json(g.gamma)},
                 {"delta", detail::complex_json(g.delta)}, {"z1", detail::complex_json(p.z1)},
                 {"z2", detail::complex_json(p.z2)}, {"t", detail::complex_json(p.t)}});
  }
  return b.finish();
}

}  // namespace

namespace detail {

/// Trial i uses a general element for i % 4 == 0 and the q = 0, q-gamma and
/// q-beta restrictions otherwise.
GroupElement cross_check_element(Rng& rng, unsigned i) {
  GroupElement g{rng.complex_box(0.5), rng.complex_box(0.5), rng.complex_box(0.5), rng.complex_box(0.5),
                 rng.complex_box(0.5)};
  switch (i % 4) {
    case 1: g.q = 0.0; break;
    case 2: g.alpha = g.beta = g.delta = 0.0; break;
    case 3: g.alpha = g.gamma = g.delta = 0.0; break;
    default: break;
  }
  return g;
}

}  // namespace detail

namespace {

CheckReport matrix_cross_check(const SuiteOptions& o) {
  ReportBuilder b("matrix.cross", "hpeq151");
  detail::Rng rng(o.seed, "matrix.cross");
  constexpr unsigned kMax = 8;
  for (unsigned i = 0; i < o.trials; ++i) {
    const GroupElement g = detail::cross_check_element(rng, i);
    const double mu_abs = rng.uniform(0.5, 1.0);
    const double mu_arg = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const cplx omega = rng.uniform() < 0.5 ? 0.0 : 0.3;
    const RepParams rp(omega, std::polar(mu_abs, mu_arg));
    double worst_rel = 0.0, worst_abs = 0.0, worst_diag = 0.0;
    bool ok = true;
    for (unsigned r = 0; r <= kMax; ++r) {
      const auto oracle = matrix_elements_oracle(g, rp, r, kMax);
      for (unsigned l = 0; l <= kMax; ++l) {
        std::vector<cplx> values;
        for (MatrixMethod m : applicable_methods(g, l, r)) {
          const cplx v = matrix_element(m, g, rp, l, r);
          const double a = std::abs(v - oracle[l]);
          const double rel = relative_difference(v, oracle[l]);
          worst_abs = std::max(worst_abs, a);
          worst_rel = std::max(worst_rel, rel);
          ok = ok && (rel <= 1e-10 || a <= 1e-12);
          values.push_back(v);
        }
        if (l == r) {
          for (const cplx& v : values) {
            const double d = std::abs(v - values.front());
            const double rel = relative_difference(v, values.front());
            worst_diag = std::max(worst_diag, rel);
            ok = ok && (rel <= 1e-12 || d <= 1e-12);
          }
        }
      }
    }
    b.add_trial(worst_abs, worst_rel, ok,
                {{"q", detail::complex_json(g.q)}, {"alpha", detail::complex_json(g.alpha)},
                 {"beta", detail::complex_json(g.beta)}, {"gamma", detail::complex_json(g.gamma)},
                 {"delta", detail::complex_json(g.delta)}, {"mu", detail::complex_json(rp.mu())},
                 {"omega", detail::complex_json(omega)}, {"diagonal_spread", detail::round15(worst_diag)}});
  }
  return b.finish();
}

}  // namespace

namespace detail {

void register_expansion_checks(std::vector<CheckDef>& out) {
  for (const auto& def : expansion_defs()) {
    const ExpansionDef* d = &def;
    out.push_back({def.base, def.paper_eq, [d](const SuiteOptions& o) { return run_expansion(*d, false, o); }});
    out.push_back({def.base + ".printed", def.paper_eq,
                   [d](const SuiteOptions& o) { return run_expansion(*d, true, o); }});
  }
  out.push_back({"genfun", "hpeq5", genfun_check});
  out.push_back({"composite.sequential", "hpeq28", composite_check});
  out.push_back({"matrix.cross", "hpeq151", matrix_cross_check});
}

}  // namespace detail

}  // namespace dhermite
