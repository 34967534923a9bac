// Exact polynomial checks (lemma relations, special values, operators,
// integral equations) and the matrix-group checks.

#include <cmath>

#include "dhermite/polys.hpp"
#include "harness_internal.hpp"

namespace dhermite {

using detail::ReportBuilder;
using nlohmann::json;

namespace {

using P = RationalMPoly;

const P& z1() { static const P v = P::variable(Var::z1); return v; }
const P& z2() { static const P v = P::variable(Var::z2); return v; }
const P& xi() { static const P v = P::variable(Var::xi); return v; }
const P& eta() { static const P v = P::variable(Var::eta); return v; }

P xi_pow(unsigned n) { return P::variable(Var::xi, n); }

BigRational ratio(unsigned a, unsigned b, unsigned c = 0) {
  BigRational q(factorial(a), factorial(b) * factorial(c));
  q.canonicalize();
  return q;
}

// Records one exact comparison: passes iff lhs == rhs.
void add_exact(ReportBuilder& b, const P& lhs, const P& rhs, json params) {
  const P diff = lhs - rhs;
  const double abs_res = diff.max_abs_coefficient();
  const double scale = std::max(lhs.max_abs_coefficient(), rhs.max_abs_coefficient());
  const double rel_res = scale > 0.0 ? abs_res / scale : abs_res;
  if (!diff.is_zero()) params["residual"] = diff.to_string();
  b.add_trial(abs_res, rel_res, diff.is_zero(), params);
}

P at_eta(const P& p) { return poly_substitute(p, Var::z1, eta()); }

P integral_0_z1(const P& integrand) { return poly_integrate_def(integrand, Var::eta, P(0), z1()); }

CheckReport lemma_check(const std::string& id, const std::string& eq, unsigned which, const SuiteOptions& o) {
  ReportBuilder b(id, eq);
  for (unsigned m = 0; m <= o.lemma_m_max; ++m) {
    const P h = dhp_2v_exact(m);
    switch (which) {
      case 9:
        if (m >= 1) add_exact(b, poly_diff(h, Var::z1), P(BigRational(m)) * xi() * dhp_2v_exact(m - 1), {{"m", m}});
        break;
      case 10:
        for (unsigned s = 0; s <= m; ++s) {
          const P rhs = P(ratio(m, m - s)) * xi_pow(s) * dhp_2v_exact(m - s);
          add_exact(b, poly_diff(h, Var::z1, s), rhs, {{"m", m}, {"s", s}});
        }
        break;
      case 11:
        if (m >= 2) {
          add_exact(b, poly_diff(h, Var::z2), P(BigRational(m * (m - 1))) * xi() * dhp_2v_exact(m - 2), {{"m", m}});
        }
        break;
      case 12:
        for (unsigned s = 0; 2 * s <= m; ++s) {
          const P rhs = P(ratio(m, m - 2 * s)) * xi_pow(s) * dhp_2v_exact(m - 2 * s);
          add_exact(b, poly_diff(h, Var::z2, s), rhs, {{"m", m}, {"s", s}});
        }
        break;
      case 13: {
        P rhs = xi() * z1() * h;
        if (m >= 1) rhs += P(BigRational(2 * m)) * z2() * xi() * dhp_2v_exact(m - 1);
        add_exact(b, dhp_2v_exact(m + 1), rhs, {{"m", m}});
        break;
      }
      case 14: {
        const P lhs = P(2) * z2() * poly_diff(h, Var::z1, 2) + z1() * xi() * poly_diff(h, Var::z1) -
                      P(BigRational(m)) * xi() * h;
        add_exact(b, lhs, P(0), {{"m", m}});
        break;
      }
      default:
        break;
    }
  }
  return b.finish();
}

CheckReport special_check(const std::string& id, const std::string& eq, SpecialValue which, const SuiteOptions& o) {
  ReportBuilder b(id, eq);
  for (unsigned m = 0; m <= o.lemma_m_max; ++m) {
    const P h = dhp_2v_exact(m);
    P direct;
    switch (which) {
      case SpecialValue::Z1Zero: direct = poly_substitute(h, Var::z1, P(0)); break;
      case SpecialValue::Z2Zero: direct = poly_substitute(h, Var::z2, P(0)); break;
      case SpecialValue::DZ1AtZ1Zero: direct = poly_substitute(poly_diff(h, Var::z1), Var::z1, P(0)); break;
    }
    add_exact(b, direct, dhp_special_value(m, which), {{"m", m}});
  }
  return b.finish();
}

CheckReport ladder_check(const SuiteOptions& o) {
  ReportBuilder b("operators.ladder", "hpeq16");
  for (unsigned m = 0; m <= o.m_max; ++m) {
    const P f = basis_vector(m);
    const P mm{BigRational(m)};
    add_exact(b, operator_apply(LadderOp::Jplus, f), basis_vector(m + 1), {{"m", m}, {"op", "J+"}});
    add_exact(b, operator_apply(LadderOp::Jminus, f), m == 0 ? P(0) : mm * basis_vector(m - 1),
              {{"m", m}, {"op", "J-"}});
    add_exact(b, operator_apply(LadderOp::J3, f), mm * f, {{"m", m}, {"op", "J3"}});
    add_exact(b, operator_apply(LadderOp::E, f), f, {{"m", m}, {"op", "E"}});
    add_exact(b, operator_apply(LadderOp::Q, f), basis_vector(m + 2), {{"m", m}, {"op", "Q"}});
  }
  return b.finish();
}

CheckReport operator_commutator_check(const SuiteOptions& o) {
  ReportBuilder b("operators.commutators", "hpeq2");
  auto br = [](LadderOp x, LadderOp y, const P& p) {
    return operator_apply(x, operator_apply(y, p)) - operator_apply(y, operator_apply(x, p));
  };
  using L = LadderOp;
  const unsigned m_max = std::min(o.m_max, 12u);
  for (unsigned m = 0; m <= m_max; ++m) {
    const P p = basis_vector(m);
    auto add = [&](const char* name, const P& lhs, const P& rhs) {
      add_exact(b, lhs, rhs, {{"m", m}, {"relation", name}});
    };
    add("[J3,Q]=2Q", br(L::J3, L::Q, p), P(2) * operator_apply(L::Q, p));
    add("[J3,J+]=J+", br(L::J3, L::Jplus, p), operator_apply(L::Jplus, p));
    add("[J3,J-]=-J-", br(L::J3, L::Jminus, p), -operator_apply(L::Jminus, p));
    add("[J-,Q]=2J+", br(L::Jminus, L::Q, p), P(2) * operator_apply(L::Jplus, p));
    add("[J-,J+]=E", br(L::Jminus, L::Jplus, p), operator_apply(L::E, p));
    add("[J+,Q]=0", br(L::Jplus, L::Q, p), P(0));
    add("[J3,E]=0", br(L::J3, L::E, p), P(0));
    add("[Q,E]=0", br(L::Q, L::E, p), P(0));
    add("[J+,E]=0", br(L::Jplus, L::E, p), P(0));
    add("[J-,E]=0", br(L::Jminus, L::E, p), P(0));
  }
  return b.finish();
}

CheckReport lie_commutator_check(const SuiteOptions&) {
  ReportBuilder b("lie.commutators", "hpeq2");
  for (const auto& rel : commutator_table(algebra_basis())) {
    double diff = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        diff = std::max(diff, std::abs(static_cast<double>(rel.computed[i][j] - rel.expected[i][j])));
    b.add_trial(diff, diff, rel.holds, {{"relation", rel.name}});
  }
  return b.finish();
}

GroupElement random_element(detail::Rng& rng) {
  GroupElement g;
  g.q = rng.complex_box(0.35);
  g.alpha = rng.complex_box(0.35);
  g.beta = rng.complex_box(0.35);
  g.gamma = rng.complex_box(0.35);
  g.delta = rng.complex_box(0.35);
  return g;
}

json element_json(const GroupElement& g) {
  return {{"q", detail::complex_json(g.q)},         {"alpha", detail::complex_json(g.alpha)},
          {"beta", detail::complex_json(g.beta)},   {"gamma", detail::complex_json(g.gamma)},
          {"delta", detail::complex_json(g.delta)}};
}

GroupElement law(const GroupElement& a, const GroupElement& b, bool printed) {
  const cplx ed = std::exp(a.delta);
  const cplx e2d = ed * ed;
  GroupElement c;
  c.q = a.q + e2d * b.q;
  c.alpha = a.alpha + b.alpha + ed * a.gamma * b.beta;
  if (!printed) c.alpha += e2d * a.gamma * a.gamma * b.q;
  c.beta = a.beta + ed * b.beta + 2.0 * e2d * a.gamma * b.q;
  c.gamma = a.gamma + b.gamma / ed;
  c.delta = a.delta + b.delta;
  return c;
}

constexpr double kLieTol = 1e-12;

CheckReport group_law_check(const SuiteOptions& o, bool printed) {
  const std::string id = printed ? "lie.group_law.printed" : "lie.group_law";
  detail::Rng rng(o.seed, "lie.group_law");
  ReportBuilder b(id, "group law");
  bool corrected_ok = true;
  for (unsigned i = 0; i < o.trials; ++i) {
    const GroupElement x = random_element(rng);
    const GroupElement y = random_element(rng);
    const GroupElement exact = group_mul(x, y);
    const double corr = max_abs_diff(law(x, y, false), exact);
    corrected_ok = corrected_ok && corr <= kLieTol;
    const double res = printed ? max_abs_diff(law(x, y, true), exact) : corr;
    b.add_trial(res, res, res <= kLieTol, {{"g1", element_json(x)}, {"g2", element_json(y)}});
  }
  return printed ? b.finish_printed(corrected_ok) : b.finish();
}

CheckReport closure_check(const SuiteOptions& o) {
  detail::Rng rng(o.seed, "lie.closure");
  ReportBuilder b("lie.closure", "group law");
  for (unsigned i = 0; i < o.trials; ++i) {
    const GroupElement x = random_element(rng);
    const GroupElement y = random_element(rng);
    const GroupElement z = random_element(rng);
    const double inv = max_abs_diff(group_mul(x, group_inv(x)), GroupElement::identity());
    const double assoc = max_abs_diff(group_mul(group_mul(x, y), z), group_mul(x, group_mul(y, z)));
    const double trip = max_abs_diff(extract_params(realize(x)), x);
    const double res = std::max({inv, assoc, trip});
    b.add_trial(res, res, res <= kLieTol, {{"g1", element_json(x)}, {"g2", element_json(y)}, {"g3", element_json(z)}});
  }
  return b.finish();
}

CheckReport one_parameter_check(const SuiteOptions& o) {
  detail::Rng rng(o.seed, "lie.one_parameter");
  ReportBuilder b("lie.one_parameter", "hpeq1");
  const AlgebraBasis basis = algebra_basis();
  const std::array<std::pair<const char*, const IntMatrix5*>, 5> gens = {{
      {"q", &basis.qq}, {"alpha", &basis.e}, {"beta", &basis.jplus}, {"gamma", &basis.jminus}, {"delta", &basis.j3}}};
  for (unsigned i = 0; i < o.trials; ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const cplx s = rng.complex_box(0.35);
      GroupElement g;
      switch (k) {
        case 0: g.q = s; break;
        case 1: g.alpha = s; break;
        case 2: g.beta = s; break;
        case 3: g.gamma = s; break;
        default: g.delta = s; break;
      }
      const Matrix5 e = matrix_exp(mat_scale(to_complex(*gens[k].second), s));
      const double res = max_abs_diff(e, realize(g));
      b.add_trial(res, res, res <= kLieTol, {{"parameter", gens[k].first}, {"value", detail::complex_json(s)}});
    }
  }
  return b.finish();
}

CheckReport volterra_check(const SuiteOptions& o, bool one_var, VolterraKernel kernel) {
  const std::string base = one_var ? "volterra1v" : "volterra";
  const bool printed = kernel == VolterraKernel::Printed;
  ReportBuilder b(base + (printed ? ".printed" : ".corrected"), one_var ? "hpeq71" : "hpeq59");
  bool corrected_ok = true;
  for (unsigned m = 0; m <= o.m_max; ++m) {
    auto residual = [&](VolterraKernel k) { return one_var ? volterra_1v_residual(m, k) : volterra_residual(m, k); };
    const P corr = residual(VolterraKernel::Corrected);
    corrected_ok = corrected_ok && corr.is_zero();
    add_exact(b, printed ? residual(VolterraKernel::Printed) : corr, P(0), {{"m", m}});
  }
  return printed ? b.finish_printed(corrected_ok) : b.finish();
}

// Intermediate steps of the integral-equation derivation, even case m = 2r.
CheckReport chain_step_check(const std::string& id, const std::string& eq, int step, const SuiteOptions&) {
  ReportBuilder b(id, eq);
  for (unsigned r = 1; r <= 8; ++r) {
    const P h = dhp_2v_exact(2 * r);
    const P lower = dhp_2v_exact(2 * r - 2);
    const P c = P(BigRational(2 * r * (2 * r - 1))) * xi_pow(2);
    switch (step) {
      case 0:
        add_exact(b, poly_diff(h, Var::z1, 2), c * lower, {{"r", r}});
        break;
      case 1:
        add_exact(b, poly_diff(h, Var::z1), c * integral_0_z1(at_eta(lower)), {{"r", r}});
        break;
      default: {
        const P rhs = c * integral_0_z1((z1() - eta()) * at_eta(lower)) + P(ratio(2 * r, r)) * xi_pow(r) *
                                                                            P::variable(Var::z2, r);
        add_exact(b, h, rhs, {{"r", r}});
        break;
      }
    }
  }
  return b.finish();
}

// Integrating 2 z2 H'' + xi z1 H' - m xi H = 0 twice from 0 and integrating by
// parts gives the kernel (m+1) z1 - (m+2) eta.
CheckReport by_parts_check(const SuiteOptions& o) {
  ReportBuilder b("chain.by_parts", "hpeq54");
  for (unsigned m = 0; m <= o.m_max; ++m) {
    const P h = dhp_2v_exact(m);
    const P h_eta = at_eta(h);
    const P dh_eta = at_eta(poly_diff(h, Var::z1));
    const P m_p{BigRational(m)};
    const P twice = integral_0_z1((z1() - eta()) * (m_p * h_eta - eta() * dh_eta));
    const P kernel = integral_0_z1((P(BigRational(m + 1)) * z1() - P(BigRational(m + 2)) * eta()) * h_eta);
    add_exact(b, twice, kernel, {{"m", m}, {"step", "parts"}});
    const P h0 = poly_substitute(h, Var::z1, P(0));
    const P dh0 = poly_substitute(poly_diff(h, Var::z1), Var::z1, P(0));
    add_exact(b, P(2) * z2() * (h - h0 - z1() * dh0), xi() * twice, {{"m", m}, {"step", "integrated"}});
  }
  return b.finish();
}

// The four printed intermediate equations are the printed integral equation at
// particular m; each is paired with the corrected equation at the same m.
CheckReport chain_printed_check(const std::string& id, const std::string& eq, int m_mul, int m_off, unsigned r_lo) {
  ReportBuilder b(id, eq);
  bool corrected_ok = true;
  for (unsigned r = r_lo; r <= 8; ++r) {
    const int mi = m_mul * static_cast<int>(r) + m_off;
    if (mi < 0) continue;
    const auto m = static_cast<unsigned>(mi);
    corrected_ok = corrected_ok && volterra_residual(m, VolterraKernel::Corrected).is_zero();
    add_exact(b, volterra_residual(m, VolterraKernel::Printed), P(0), {{"r", r}, {"m", m}});
  }
  return b.finish_printed(corrected_ok);
}

}  // namespace

RationalMPoly volterra_residual(unsigned m, VolterraKernel kernel) {
  const unsigned n = m / 2;
  const P h = dhp_2v_exact(m);
  P k = P(BigRational(m + 1)) * z1() - P(BigRational(m + 2)) * eta();
  if (kernel == VolterraKernel::Printed) k = (z1() - eta()) * k;
  const unsigned p = kernel == VolterraKernel::Corrected ? m - n : n;
  const P tail = P(ratio(m, n)) * P(2) * xi_pow(p) * P::variable(Var::z1, m - 2 * n) *
                 P::variable(Var::z2, n + 1);
  return P(2) * z2() * h - xi() * integral_0_z1(k * at_eta(h)) - tail;
}

RationalMPoly volterra_1v_residual(unsigned m, VolterraKernel kernel) {
  const unsigned n = m / 2;
  const P h = dhp_1v_exact(m);
  P k = P(BigRational(m + 1)) * z1() - P(BigRational(m + 2)) * eta();
  if (kernel == VolterraKernel::Printed) k = (z1() - eta()) * k;
  BigRational half_pow(1);
  for (unsigned i = 0; i < n; ++i) half_pow *= make_rational(-1, 2);
  const unsigned p = kernel == VolterraKernel::Corrected ? m - n : n;
  const P tail = P(half_pow * ratio(m, n)) * xi_pow(p) * P::variable(Var::z1, m - 2 * n);
  return h + xi() * integral_0_z1(k * at_eta(h)) - tail;
}

namespace detail {

void register_exact_checks(std::vector<CheckDef>& out) {
  auto lemma = [&out](const char* id, const char* eq, unsigned which) {
    out.push_back({id, eq, [=](const SuiteOptions& o) { return lemma_check(id, eq, which, o); }});
  };
  lemma("lemma.dz1", "hpeq9", 9);
  lemma("lemma.dz1_iterated", "hpeq10", 10);
  lemma("lemma.dz2", "hpeq11", 11);
  lemma("lemma.dz2_iterated", "hpeq12", 12);
  lemma("lemma.recurrence", "hpeq13", 13);
  lemma("lemma.ode", "hpeq14", 14);

  auto special = [&out](const char* id, const char* eq, SpecialValue which) {
    out.push_back({id, eq, [=](const SuiteOptions& o) { return special_check(id, eq, which, o); }});
  };
  special("special.z1_zero", "hpeq46", SpecialValue::Z1Zero);
  special("special.z2_zero", "hpeq47", SpecialValue::Z2Zero);
  special("special.dz1_at_z1_zero", "hpeq48", SpecialValue::DZ1AtZ1Zero);

  out.push_back({"operators.ladder", "hpeq16", ladder_check});
  out.push_back({"operators.commutators", "hpeq2", operator_commutator_check});
  out.push_back({"lie.commutators", "hpeq2", lie_commutator_check});
  out.push_back({"lie.group_law", "group law", [](const SuiteOptions& o) { return group_law_check(o, false); }});
  out.push_back({"lie.group_law.printed", "group law", [](const SuiteOptions& o) { return group_law_check(o, true); }});
  out.push_back({"lie.closure", "group law", closure_check});
  out.push_back({"lie.one_parameter", "hpeq1", one_parameter_check});

  for (bool one_var : {false, true}) {
    for (auto k : {VolterraKernel::Corrected, VolterraKernel::Printed}) {
      const std::string id = std::string(one_var ? "volterra1v" : "volterra") +
                             (k == VolterraKernel::Printed ? ".printed" : ".corrected");
      out.push_back({id, one_var ? "hpeq71" : "hpeq59",
                     [=](const SuiteOptions& o) { return volterra_check(o, one_var, k); }});
    }
  }

  auto step = [&out](const char* id, const char* eq, int which) {
    out.push_back({id, eq, [=](const SuiteOptions& o) { return chain_step_check(id, eq, which, o); }});
  };
  step("chain.second_derivative", "hpeq51", 0);
  step("chain.first_integral", "hpeq52", 1);
  step("chain.second_integral", "hpeq53", 2);
  out.push_back({"chain.by_parts", "hpeq54", by_parts_check});

  auto printed = [&out](const char* id, const char* eq, int mul, int off, unsigned r_lo) {
    out.push_back({id, eq, [=](const SuiteOptions&) { return chain_printed_check(id, eq, mul, off, r_lo); }});
  };
  printed("chain.even.printed", "hpeq54", 2, -2, 1);
  printed("chain.even_shifted.printed", "hpeq55", 2, 0, 0);
  printed("chain.odd.printed", "hpeq57", 2, -1, 1);
  printed("chain.odd_shifted.printed", "hpeq58", 2, 1, 0);
}

}  // namespace detail

}  // namespace dhermite
