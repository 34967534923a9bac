#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "dhermite/polys.hpp"

using namespace dhermite;
using P = RationalMPoly;

namespace {

const P z1 = P::variable(Var::z1);
const P z2 = P::variable(Var::z2);
const P xi = P::variable(Var::xi);

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("polys") {

TEST_CASE("degenerate parameter") {
  CHECK(xi_of_tau(0.0) == cplx(1.0));
  CHECK(close(xi_of_tau(std::numbers::e - 1.0), 1.0 / (std::numbers::e - 1.0)));
  CHECK(close(xi_of_tau(1.0), std::log(2.0)));
  CHECK(close(xi_of_tau(1e-6), 1.0 - 0.5e-6 + 1e-12 / 3.0, 1e-15));
  CHECK_THROWS_AS(xi_of_tau(-1.0), std::domain_error);
}

TEST_CASE("classical Hermite and Hermite numbers") {
  CHECK(hermite_classical(0, 3.7) == cplx(1.0));
  CHECK(close(hermite_classical(1, 0.3), 0.6));
  CHECK(close(hermite_classical(2, 0.5), -1.0));
  CHECK(hermite_number(0) == 1);
  CHECK(hermite_number(1) == 0);
  CHECK(hermite_number(2) == -2);
  CHECK(hermite_number(4) == 12);
  CHECK(hermite_classical_exact(3) == P(8) * poly_pow(z1, 3) - P(12) * z1);
}

TEST_CASE("two-variable Hermite") {
  CHECK(hermite_2v(0, 0.4, 0.2) == cplx(1.0));
  CHECK(hermite_2v_exact(2) == poly_pow(z1, 2) + P(2) * z2);
  for (unsigned m = 0; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(close(hermite_2v(m, 2.0 * 0.35, -1.0), hermite_classical(m, 0.35), 1e-11));
  }
}

TEST_CASE("degenerate two-variable Hermite") {
  CHECK(dhp_2v_exact(0) == P(1));
  CHECK(dhp_2v_exact(1) == xi * z1);
  CHECK(dhp_2v_exact(2) == poly_pow(xi, 2) * poly_pow(z1, 2) + P(2) * xi * z2);
  const auto d0 = DegenerateParam::from_tau(0.0);
  for (unsigned m = 0; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(close(dhp_2v(m, 0.3, -0.7, d0), hermite_2v(m, 0.3, -0.7)));
  }
  const auto d = DegenerateParam::from_tau(0.5);
  const auto seq = dhp_2v_sequence(10, 0.3, 0.8, d.xi);
  for (unsigned m = 0; m <= 10; ++m) {
    EvalPoint pt;
    pt.set(Var::z1, 0.3).set(Var::z2, 0.8).set(Var::xi, d.xi);
    CHECK(close(seq[m], poly_eval(dhp_2v_exact(m), pt)));
    CHECK(close(dhp_2v(m, 0.3, 0.8, d), seq[m]));
  }
}

TEST_CASE("one-variable slice") {
  CHECK(dhp_1v_exact(0) == P(1));
  CHECK(dhp_1v_exact(2) == poly_pow(xi, 2) * poly_pow(z1, 2) - xi);
  const auto d0 = DegenerateParam::from_tau(0.0);
  for (unsigned m = 0; m <= 10; ++m) {
    CHECK(close(dhp_1v(m, 0.4, d0), std::pow(2.0, -0.5 * m) * hermite_classical(m, 0.4 / std::sqrt(2.0)), 1e-11));
  }
}

TEST_CASE("special values") {
  CHECK(dhp_special_value(2, SpecialValue::Z1Zero) == P(2) * xi * z2);
  CHECK(dhp_special_value(3, SpecialValue::Z2Zero) == poly_pow(xi, 3) * poly_pow(z1, 3));
  CHECK(dhp_special_value(2, SpecialValue::DZ1AtZ1Zero).is_zero());
  CHECK(dhp_special_value(3, SpecialValue::Z1Zero).is_zero());
}

TEST_CASE("generalized Laguerre") {
  CHECK(laguerre_gen(0, 0.7, 1.3) == cplx(1.0));
  CHECK(close(laguerre_gen(1, 0.7, 1.3), 1.0 + 0.7 - 1.3));
  CHECK(close(laguerre_gen(2, -2.0, 0.6), 0.18));
}

TEST_CASE("confluent hypergeometric") {
  CHECK(confluent_1f1(0.0, 2.0, 5.0) == cplx(1.0));
  CHECK(close(confluent_1f1(-1.0, 2.0, 0.8), 1.0 - 0.4));
  CHECK(confluent_1f1(0.3, 1.5, 0.0) == cplx(1.0));
  CHECK(close(confluent_1f1(1.0, 1.0, 0.5), std::exp(0.5)));
  CHECK_THROWS_AS(confluent_1f1(0.5, -2.0, 0.3), std::domain_error);
}

TEST_CASE("terminating Lauricella series") {
  CHECK(lauricella_f111(0, 3, 0.4, 0.9) == cplx(1.0));
  CHECK(lauricella_f111(2, 5, 0.0, 0.0) == cplx(1.0));
  for (unsigned r = 0; r <= 6; ++r) {
    for (unsigned l = 0; l <= r; ++l) {
      CAPTURE(l);
      CAPTURE(r);
      CHECK(close(lauricella_f111(l, r, {0.3, -0.2}, {0.5, 0.1}),
                  lauricella_f111_pochhammer(l, r, {0.3, -0.2}, {0.5, 0.1})));
    }
  }
  // l=1, r=2: only (s,k) = (0,0) and (0,1) survive.
  CHECK(close(lauricella_f111(1, 2, 0.0, 0.6), 1.0 - 0.6 / 2.0));
  CHECK_THROWS_AS(lauricella_f111(3, 2, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("Lauricella convergence condition") {
  CHECK(lauricella_convergence_ok(lauricella_matrix_element_shape()));
  LauricellaShape boundary;
  boundary.v = {1.0};
  boundary.phi = {1.0};
  CHECK_FALSE(lauricella_convergence_ok(boundary));
  LauricellaShape constant;
  CHECK(lauricella_convergence_ok(constant));
}

TEST_CASE("family names") {
  for (auto f : {PolyFamily::HermiteClassical, PolyFamily::HermiteNumber, PolyFamily::Hermite2V, PolyFamily::DHP2V,
                 PolyFamily::DHP1V, PolyFamily::LaguerreGen, PolyFamily::Confluent1F1, PolyFamily::LauricellaF111}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_FALSE(parse_family("chebyshev").has_value());
  CHECK(family_has_exact(PolyFamily::DHP2V));
  CHECK_FALSE(family_has_exact(PolyFamily::LaguerreGen));
}

}  // TEST_SUITE
