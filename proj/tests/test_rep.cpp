#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dhermite/rep.hpp"

using namespace dhermite;
using P = RationalMPoly;

namespace {

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

cplx draw(std::mt19937_64& rng, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  const double re = u(rng);
  return {re, u(rng)};
}

GroupElement random_element(std::mt19937_64& rng, double half = 0.5) {
  return {draw(rng, half), draw(rng, half), draw(rng, half), draw(rng, half), draw(rng, half)};
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("representation parameters") {
  CHECK_THROWS_AS(RepParams(0.0, 0.0), std::invalid_argument);
  const RepParams rp;
  CHECK(rp.mu() == cplx(1.0));
  CHECK(rp.omega() == cplx(0.0));
}

TEST_CASE("multiplier action") {
  const ComplexSeries f({0.5, -1.0, 2.0}, 4);
  const ComplexSeries same = multiplier_action(GroupElement::identity(), RepParams(), f);
  for (std::size_t i = 0; i <= 4; ++i) CHECK(close(same[i], f[i]));

  GroupElement a;
  a.alpha = 0.3;
  const RepParams rp(0.0, {0.7, 0.2});
  const ComplexSeries one = multiplier_action(a, rp, ComplexSeries::constant(1.0, 3));
  CHECK(close(one[0], std::exp(rp.mu() * 0.3)));
  CHECK(std::abs(one[1]) == 0.0);

  GroupElement c;
  c.gamma = {0.2, 0.1};
  const ComplexSeries z = multiplier_action(c, RepParams(), ComplexSeries::linear(0.0, 1.0, 3));
  CHECK(close(z[0], c.gamma));
  CHECK(close(z[1], 1.0));
}

TEST_CASE("series oracle") {
  for (unsigned r = 0; r <= 4; ++r) {
    const auto col = matrix_elements_oracle(GroupElement::identity(), RepParams(), r, 6);
    for (unsigned l = 0; l <= 6; ++l) CHECK(close(col[l], l == r ? 1.0 : 0.0));
  }
  GroupElement g;
  g.gamma = 0.4;
  g.alpha = 0.2;
  const auto col = matrix_elements_oracle(g, RepParams(), 3, 5);
  CHECK(close(col[0], std::exp(0.2) * 0.064));
  CHECK(close(col[1], std::exp(0.2) * 3.0 * 0.16));
  CHECK(close(col[3], std::exp(0.2)));
  CHECK(std::abs(col[4]) < 1e-15);
}

TEST_CASE("Lauricella and upper double sum") {
  std::mt19937_64 rng(1);
  const GroupElement g = random_element(rng);
  const RepParams rp({0.3, 0.0}, {0.8, 0.3});
  CHECK(close(matrix_element_lauricella(g, rp, 0, 0), std::exp(rp.mu() * g.alpha - rp.omega() * g.delta)));
  CHECK(close(matrix_element_lauricella(GroupElement::identity(), RepParams(), 3, 3), 1.0));
  const auto col = matrix_elements_oracle(g, rp, 2, 4);
  CHECK(close(matrix_element_lauricella(g, rp, 1, 2), col[1], 1e-10));
  for (unsigned r = 0; r <= 6; ++r) {
    for (unsigned l = 0; l <= r; ++l) {
      CHECK(close(matrix_element_lauricella(g, rp, l, r), matrix_element_upper_sum(g, rp, l, r), 1e-12));
    }
  }
  GroupElement flat = g;
  flat.gamma = 0.0;
  CHECK(matrix_element_upper_sum(flat, rp, 1, 3) == cplx(0.0));
  CHECK(close(matrix_element_upper_sum(flat, rp, 2, 2), std::exp(rp.mu() * g.alpha + (2.0 - rp.omega()) * g.delta)));
}

TEST_CASE("lower double sum and Hermite form") {
  CHECK(close(matrix_element_lower_sum(GroupElement::identity(), RepParams(), 4, 4), 1.0));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_element(rng);
    const unsigned r = static_cast<unsigned>(i % 9);
    const unsigned l = r + static_cast<unsigned>(i % 5);
    const RepParams rp(0.0, {0.9, -0.2});
    const cplx lower = matrix_element_lower_sum(g, rp, l, r);
    CHECK(close(matrix_element_hermite(g, rp, l, r), lower, 1e-10));
    CHECK(close(matrix_element_hermite(g, rp, l, r, true), lower, 1e-10));
  }
  GroupElement q;
  q.q = {0.3, 0.1};
  CHECK(close(matrix_element_hermite(q, RepParams(), 2, 0), q.q));
  GroupElement q0 = q;
  q0.q = 0.0;
  q0.beta = 0.4;
  q0.gamma = -0.3;
  for (unsigned l = 0; l <= 6; ++l) {
    for (unsigned r = 0; r <= l; ++r) {
      CHECK(close(matrix_element_lower_sum(q0, RepParams(), l, r), matrix_element_laguerre(q0, RepParams(), l, r)));
    }
  }
}

TEST_CASE("q = 0 forms") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    GroupElement g = random_element(rng);
    g.q = 0.0;
    const RepParams rp(0.3, {0.6, 0.4});
    CHECK(close(matrix_element_laguerre(g, rp, 0, 0), std::exp(rp.mu() * g.alpha - rp.omega() * g.delta)));
    for (unsigned r = 0; r <= 10; ++r) {
      const auto col = matrix_elements_oracle(g, rp, r, 10);
      for (unsigned l = 0; l <= 10; ++l) {
        CHECK(close(matrix_element_laguerre(g, rp, l, r), col[l], 1e-10));
        CHECK(close(matrix_element_laguerre_1f1(g, rp, l, r), col[l], 1e-10));
      }
    }
  }
  GroupElement b0;
  b0.gamma = 0.5;
  CHECK(close(matrix_element_laguerre(b0, RepParams(), 1, 3), 3.0 * 0.25));
  CHECK_THROWS_AS(matrix_element_laguerre(random_element(rng), RepParams(), 1, 1), std::domain_error);
}

TEST_CASE("q-gamma and q-beta forms") {
  std::mt19937_64 rng(6);
  GroupElement qg;
  qg.q = draw(rng, 0.5);
  qg.gamma = draw(rng, 0.5);
  CHECK(close(matrix_element_q_gamma(qg, RepParams(), 0, 0), 1.0));
  GroupElement qb;
  qb.q = draw(rng, 0.5);
  qb.beta = draw(rng, 0.5);
  CHECK(close(matrix_element_q_beta(qb, RepParams(), 3, 3), 1.0));
  CHECK(matrix_element_q_beta(qb, RepParams(), 1, 3) == cplx(0.0));
  GroupElement qb0 = qb;
  qb0.beta = 0.0;
  CHECK(std::abs(matrix_element_q_beta(qb0, RepParams(), 4, 1)) == 0.0);

  GroupElement g0 = qg;
  g0.q = 0.0;
  CHECK(close(matrix_element_q_gamma(g0, RepParams(), 1, 3), 3.0 * g0.gamma * g0.gamma));
  CHECK(matrix_element_q_gamma(g0, RepParams(), 3, 1) == cplx(0.0));

  const RepParams rp(0.0, {0.7, -0.5});
  for (unsigned r = 0; r <= 8; ++r) {
    const auto cg = matrix_elements_oracle(qg, rp, r, 8);
    const auto cb = matrix_elements_oracle(qb, rp, r, 8);
    for (unsigned l = 0; l <= 8; ++l) {
      CHECK(close(matrix_element_q_gamma(qg, rp, l, r), cg[l], 1e-10));
      CHECK(close(matrix_element_q_beta(qb, rp, l, r), cb[l], 1e-10));
    }
  }
  CHECK_THROWS_AS(matrix_element_q_gamma(random_element(rng), RepParams(), 1, 1), std::domain_error);
}

TEST_CASE("dispatch and table") {
  for (auto m : {MatrixMethod::Lauricella, MatrixMethod::Hermite, MatrixMethod::UpperSum, MatrixMethod::LowerSum,
                 MatrixMethod::Laguerre, MatrixMethod::QGamma, MatrixMethod::QBeta, MatrixMethod::Oracle}) {
    CHECK(parse_method(method_tag(m)) == m);
  }
  CHECK(method_tag(MatrixMethod::Laguerre) == "laguerre_hpeq66");
  CHECK_FALSE(parse_method("bogus").has_value());

  const auto id = build_matrix_element_table(GroupElement::identity(), RepParams(), 3, 3);
  CHECK(id.cells.size() == 16);
  CHECK(id.max_rel_err == 0.0);
  for (const auto& c : id.cells) CHECK(c.value == cplx(c.l == c.r ? 1.0 : 0.0));

  GroupElement q0;
  q0.beta = 0.2;
  q0.gamma = 0.1;
  for (const auto& c : build_matrix_element_table(q0, RepParams(), 3, 3).cells) {
    CHECK(c.method == MatrixMethod::Laguerre);
  }

  std::mt19937_64 rng(8);
  const GroupElement g = random_element(rng);
  CHECK(build_matrix_element_table(g, RepParams(0.3, {0.5, 0.5}), 8, 8).max_rel_err <= 1e-10);
  CHECK_THROWS_AS(matrix_element(MatrixMethod::UpperSum, g, RepParams(), 3, 1), std::domain_error);
  CHECK(relative_difference(0.0, 0.0) == 0.0);
}

TEST_CASE("ladder operators") {
  for (unsigned m = 0; m <= 15; ++m) {
    const P f = basis_vector(m);
    CHECK(operator_apply(LadderOp::J3, f) == P(static_cast<long>(m)) * f);
    CHECK(operator_apply(LadderOp::E, f) == f);
    CHECK(operator_apply(LadderOp::Q, f) == basis_vector(m + 2));
    CHECK(operator_apply(LadderOp::Jplus, f) == basis_vector(m + 1));
  }
  CHECK_THROWS_AS(operator_apply(LadderOp::Jminus, P::variable(Var::z1, 2)), std::domain_error);
}

TEST_CASE("one-parameter actions") {
  const FunctionPoint p{0.3, -0.6, xi_of_tau(0.5), 0.2};
  const AnalyticFunction f = [](const FunctionPoint& x) { return x.z1 * x.z1 * x.t + x.z2 * x.t * x.t; };
  for (auto op : {LadderOp::Jplus, LadderOp::Jminus, LadderOp::J3, LadderOp::E, LadderOp::Q}) {
    CHECK(close(one_param_action(op, 0.0, f, p), f(p)));
  }
  const AnalyticFunction mono = [](const FunctionPoint& x) { return x.t * x.t * x.t; };
  CHECK(close(one_param_action(LadderOp::J3, 0.4, mono, p), std::pow(0.2 * std::exp(0.4), 3)));

  // exp(beta J+) on a basis vector against the exact operator series.
  const unsigned m = 3;
  const cplx beta{0.25, -0.1};
  EvalPoint ep;
  ep.set(Var::z1, p.z1).set(Var::z2, p.z2).set(Var::xi, p.xi).set(Var::t, p.t);
  P term = basis_vector(m);
  cplx series = poly_eval(term, ep);
  cplx power = 1.0;
  for (unsigned k = 1; k <= 25; ++k) {
    term = operator_apply(LadderOp::Jplus, term);
    power *= beta / static_cast<double>(k);
    series += power * poly_eval(term, ep);
  }
  const AnalyticFunction basis = [m](const FunctionPoint& x) {
    return dhp_2v_xi(m, x.z1, x.z2, x.xi) * std::pow(x.t, static_cast<double>(m));
  };
  CHECK(close(one_param_action(LadderOp::Jplus, beta, basis, p), series, 1e-10));

  const FunctionPoint far{0.3, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(one_param_action(LadderOp::Q, 0.3, f, far), std::domain_error);
}

TEST_CASE("composite action") {
  const FunctionPoint p{0.4, 0.7, xi_of_tau(-0.5), -0.15};
  for (unsigned r = 0; r <= 4; ++r) {
    CHECK(close(composite_action_U(GroupElement::identity(), r, p), dhp_2v_xi(r, p.z1, p.z2, p.xi)));
  }
  GroupElement b;
  b.beta = {0.3, 0.2};
  const cplx expect = std::exp(p.xi * (b.beta * b.beta * p.z2 * p.t * p.t + b.beta * p.z1 * p.t)) *
                      dhp_2v_xi(2, p.z1 + 2.0 * p.z2 * b.beta * p.t, p.z2, p.xi);
  CHECK(close(composite_action_U(b, 2, p), expect));

  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = random_element(rng, 0.35);
    for (unsigned r = 0; r <= 4; ++r) {
      CHECK(close(composite_action_U(g, r, p), composite_action_sequential(g, r, p), 1e-10));
    }
  }
}

}  // TEST_SUITE
