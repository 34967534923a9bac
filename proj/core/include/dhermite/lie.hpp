#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhermite {

template <typename T>
using Mat5 = std::array<std::array<T, 5>, 5>;

using Matrix5 = Mat5<std::complex<double>>;
using IntMatrix5 = Mat5<std::int64_t>;

template <typename T>
Mat5<T> mat_identity() {
  Mat5<T> m{};
  for (int i = 0; i < 5; ++i) m[i][i] = T(1);
  return m;
}

template <typename T>
Mat5<T> matmul(const Mat5<T>& a, const Mat5<T>& b) {
  Mat5<T> c{};
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 5; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <typename T>
Mat5<T> commutator(const Mat5<T>& a, const Mat5<T>& b) {
  Mat5<T> ab = matmul(a, b);
  const Mat5<T> ba = matmul(b, a);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) ab[i][j] -= ba[i][j];
  return ab;
}

template <typename T>
Mat5<T> mat_scale(const Mat5<T>& a, T s) {
  Mat5<T> c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

Matrix5 to_complex(const IntMatrix5& m);
double max_abs_diff(const Matrix5& a, const Matrix5& b);

/// g(q, alpha, beta, gamma, delta).
struct GroupElement {
  std::complex<double> q{}, alpha{}, beta{}, gamma{}, delta{};

  static GroupElement identity() { return {}; }
};

double max_abs_diff(const GroupElement& a, const GroupElement& b);

/// Upper-triangular 5x5 realization of the group.
Matrix5 realize(const GroupElement& g);

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads (q, alpha, beta, gamma, delta) back from a group matrix. delta is the
/// principal log of M[1][1], shifted by 2 pi i k to agree with M[0][4]. Every
/// entry is then compared with realize() of the result; a mismatch above tol
/// (scaled by the entry size) throws ExtractionError.
GroupElement extract_params(const Matrix5& m, double tol = 1e-10);

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& g);

/// Gauss-Jordan inverse with partial pivoting; throws std::domain_error if
/// singular.
Matrix5 matrix_inverse(const Matrix5& m);

/// Truncated Taylor series of exp(M).
Matrix5 matrix_exp(const Matrix5& m, unsigned order = 20);

struct AlgebraBasis {
  IntMatrix5 jplus, jminus, j3, e, qq;
};

/// Derivatives of realize() at the identity along beta, gamma, delta, alpha
/// and q, computed with dual numbers so the entries are exact.
AlgebraBasis algebra_basis();

struct CommutatorRelation {
  std::string name;      // e.g. "[j3,Q] = 2Q"
  IntMatrix5 computed;
  IntMatrix5 expected;
  bool holds = false;
};

std::vector<CommutatorRelation> commutator_table(const AlgebraBasis& basis);

/// Parameters (beta', gamma', delta', alpha', q') with
///   g = exp(beta' j+) exp(gamma' j-) exp(delta' j3) exp(alpha' E) exp(q' Q).
struct OrderedFactors {
  std::complex<double> beta{}, gamma{}, delta{}, alpha{}, q{};
};

OrderedFactors ordered_factors(const GroupElement& g);
GroupElement from_ordered_factors(const OrderedFactors& f);

}  // namespace dhermite
