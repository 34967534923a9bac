#include <tuple>
#include <random>

#include "doctest.h"
#include "dhermite/lie.hpp"
#include "dhermite/series.hpp"

using namespace dhermite;

namespace {

IntMatrix5 sparse(std::initializer_list<std::tuple<int, int, long long>> entries) {
  IntMatrix5 m{};
  for (const auto& [i, j, v] : entries) m[i][j] = v;
  return m;
}

GroupElement random_element(std::mt19937_64& rng, double half = 0.5) {
  std::uniform_real_distribution<double> u(-half, half);
  auto c = [&] { return cplx(u(rng), u(rng)); };
  return {c(), c(), c(), c(), c()};
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("realization") {
  CHECK(max_abs_diff(realize(GroupElement::identity()), mat_identity<cplx>()) == 0.0);

  GroupElement a;
  a.alpha = {0.3, -0.1};
  Matrix5 expect = mat_identity<cplx>();
  expect[0][3] = 2.0 * a.alpha;
  CHECK(max_abs_diff(realize(a), expect) == 0.0);

  GroupElement q;
  q.q = 0.25;
  expect = mat_identity<cplx>();
  expect[1][2] = 0.5;
  CHECK(max_abs_diff(realize(q), expect) == 0.0);
}

TEST_CASE("group law through the matrix product") {
  std::mt19937_64 rng(7);
  const GroupElement g = random_element(rng);
  CHECK(max_abs_diff(group_mul(g, GroupElement::identity()), g) < 1e-14);

  GroupElement q1, q2;
  q1.q = 0.2;
  q2.q = {-0.1, 0.4};
  CHECK(std::abs(group_mul(q1, q2).q - (q1.q + q2.q)) < 1e-15);

  GroupElement d, q3;
  d.delta = 0.4;
  q3.q = 0.3;
  CHECK(std::abs(group_mul(d, q3).q - std::exp(0.8) * 0.3) < 1e-14);
}

TEST_CASE("parameter extraction") {
  const GroupElement id = extract_params(mat_identity<cplx>());
  CHECK(max_abs_diff(id, GroupElement::identity()) == 0.0);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_element(rng);
    CHECK(max_abs_diff(extract_params(realize(g)), g) < 1e-12);
  }

  Matrix5 singular = mat_identity<cplx>();
  singular[1][1] = 0.0;
  CHECK_THROWS_AS(extract_params(singular), ExtractionError);

  Matrix5 outside = mat_identity<cplx>();
  outside[3][0] = 1.0;
  CHECK_THROWS_AS(extract_params(outside), ExtractionError);
}

TEST_CASE("inverse") {
  CHECK(max_abs_diff(group_inv(GroupElement::identity()), GroupElement::identity()) < 1e-15);
  GroupElement a;
  a.alpha = {0.2, 0.3};
  GroupElement minus_a;
  minus_a.alpha = -a.alpha;
  CHECK(max_abs_diff(group_inv(a), minus_a) < 1e-15);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_element(rng);
    CHECK(max_abs_diff(group_mul(g, group_inv(g)), GroupElement::identity()) < 1e-12);
  }
}

TEST_CASE("associativity with larger delta") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    GroupElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    a.delta *= 2.0;
    b.delta *= 2.0;
    CHECK(max_abs_diff(group_mul(group_mul(a, b), c), group_mul(a, group_mul(b, c))) < 1e-12);
  }
}

TEST_CASE("algebra basis") {
  const AlgebraBasis b = algebra_basis();
  CHECK(b.jplus == sparse({{0, 2, 1}, {1, 3, 1}}));
  CHECK(b.jminus == sparse({{0, 1, 1}, {2, 3, -1}}));
  CHECK(b.j3 == sparse({{0, 4, 1}, {1, 1, 1}, {2, 2, -1}}));
  CHECK(b.e == sparse({{0, 3, 2}}));
  CHECK(b.qq == sparse({{1, 2, 2}}));
}

TEST_CASE("commutators") {
  const AlgebraBasis b = algebra_basis();
  CHECK(commutator(b.j3, b.qq) == mat_scale(b.qq, std::int64_t{2}));
  CHECK(commutator(b.jminus, b.jplus) == b.e);
  CHECK(commutator(b.jplus, b.qq) == IntMatrix5{});
  const auto table = commutator_table(b);
  CHECK(table.size() == 10);
  for (const auto& rel : table) {
    CAPTURE(rel.name);
    CHECK(rel.holds);
  }
}

TEST_CASE("one-parameter subgroups") {
  const AlgebraBasis b = algebra_basis();
  const cplx s{0.5, -0.2};
  GroupElement g;
  g.delta = s;
  CHECK(max_abs_diff(matrix_exp(mat_scale(to_complex(b.j3), s)), realize(g)) < 1e-12);
  g = {};
  g.beta = s;
  CHECK(max_abs_diff(matrix_exp(mat_scale(to_complex(b.jplus), s)), realize(g)) < 1e-12);
  g = {};
  g.q = s;
  CHECK(max_abs_diff(matrix_exp(mat_scale(to_complex(b.qq), s)), realize(g)) < 1e-12);
}

TEST_CASE("ordered factors") {
  std::mt19937_64 rng(9);
  const AlgebraBasis b = algebra_basis();
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = random_element(rng, 0.35);
    const OrderedFactors f = ordered_factors(g);
    Matrix5 prod = matrix_exp(mat_scale(to_complex(b.jplus), f.beta));
    prod = matmul(prod, matrix_exp(mat_scale(to_complex(b.jminus), f.gamma)));
    prod = matmul(prod, matrix_exp(mat_scale(to_complex(b.j3), f.delta)));
    prod = matmul(prod, matrix_exp(mat_scale(to_complex(b.e), f.alpha)));
    prod = matmul(prod, matrix_exp(mat_scale(to_complex(b.qq), f.q)));
    CHECK(max_abs_diff(prod, realize(g)) < 1e-12);
    CHECK(max_abs_diff(from_ordered_factors(f), g) < 1e-14);
  }
}

}  // TEST_SUITE
