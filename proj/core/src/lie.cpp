#include "dhermite/lie.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dhermite {

namespace {

using cplx = std::complex<double>;

// First-order dual number a + b eps, eps^2 = 0.
struct Dual {
  cplx v{}, d{};
  Dual() = default;
  Dual(cplx value, cplx deriv = {}) : v(value), d(deriv) {}  // NOLINT
  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend Dual exp(const Dual& a) {
    const cplx e = std::exp(a.v);
    return {e, e * a.d};
  }
};

template <typename T>
Mat5<T> realize_generic(const T& q, const T& alpha, const T& beta, const T& gamma, const T& delta) {
  using std::exp;
  const T ed = exp(delta);
  const T emd = exp(-delta);
  Mat5<T> m{};
  m[0] = {T(1.0), gamma * ed, beta * emd, T(2.0) * alpha - beta * gamma, delta};
  m[1] = {T(0.0), ed, T(2.0) * q * emd, beta - T(2.0) * q * gamma, T(0.0)};
  m[2] = {T(0.0), T(0.0), emd, -gamma, T(0.0)};
  m[3] = {T(0.0), T(0.0), T(0.0), T(1.0), T(0.0)};
  m[4] = {T(0.0), T(0.0), T(0.0), T(0.0), T(1.0)};
  return m;
}

IntMatrix5 derivative_at_identity(int which) {
  std::array<Dual, 5> p{};  // q, alpha, beta, gamma, delta
  p[static_cast<std::size_t>(which)] = Dual(0.0, 1.0);
  const Mat5<Dual> m = realize_generic(p[0], p[1], p[2], p[3], p[4]);
  IntMatrix5 out{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const cplx d = m[i][j].d;
      out[i][j] = static_cast<std::int64_t>(std::llround(d.real()));
      if (d.imag() != 0.0 || static_cast<double>(out[i][j]) != d.real()) {
        throw std::logic_error("algebra_basis: non-integer derivative entry");
      }
    }
  }
  return out;
}

IntMatrix5 int_add(const IntMatrix5& a, const IntMatrix5& b, std::int64_t sb = 1) {
  IntMatrix5 c = a;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) c[i][j] += sb * b[i][j];
  return c;
}

}  // namespace

Matrix5 to_complex(const IntMatrix5& m) {
  Matrix5 c{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) c[i][j] = static_cast<double>(m[i][j]);
  return c;
}

double max_abs_diff(const Matrix5& a, const Matrix5& b) {
  double d = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double max_abs_diff(const GroupElement& a, const GroupElement& b) {
  return std::max({std::abs(a.q - b.q), std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta),
                   std::abs(a.gamma - b.gamma), std::abs(a.delta - b.delta)});
}

Matrix5 realize(const GroupElement& g) {
  return realize_generic<cplx>(g.q, g.alpha, g.beta, g.gamma, g.delta);
}

GroupElement extract_params(const Matrix5& m, double tol) {
  if (m[1][1] == cplx{}) {
    throw ExtractionError("extract_params: M[1][1] is zero, delta undefined");
  }
  GroupElement g;
  g.delta = std::log(m[1][1]);
  // Pick the branch closest to the additive corner entry.
  const double k = std::round((m[0][4] - g.delta).imag() / (2.0 * std::numbers::pi));
  g.delta += cplx(0.0, 2.0 * std::numbers::pi * k);
  const cplx ed = std::exp(g.delta);
  g.gamma = -m[2][3];
  g.beta = m[0][2] * ed;
  g.q = m[1][2] * ed / 2.0;
  g.alpha = (m[0][3] + g.beta * g.gamma) / 2.0;

  const Matrix5 back = realize(g);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double scale = std::max(1.0, std::abs(m[i][j]));
      if (std::abs(back[i][j] - m[i][j]) > tol * scale) {
        throw ExtractionError("extract_params: matrix is not in the image of the group at entry (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return g;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  return extract_params(matmul(realize(a), realize(b)));
}

GroupElement group_inv(const GroupElement& g) { return extract_params(matrix_inverse(realize(g))); }

Matrix5 matrix_inverse(const Matrix5& m) {
  Matrix5 a = m;
  Matrix5 inv = mat_identity<cplx>();
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 5; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == cplx{}) {
      throw std::domain_error("matrix_inverse: singular matrix");
    }
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const cplx p = a[col][col];
    for (int j = 0; j < 5; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 5; ++r) {
      if (r == col || a[r][col] == cplx{}) continue;
      const cplx f = a[r][col];
      for (int j = 0; j < 5; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Matrix5 matrix_exp(const Matrix5& m, unsigned order) {
  Matrix5 sum = mat_identity<cplx>();
  Matrix5 term = sum;
  for (unsigned k = 1; k <= order; ++k) {
    term = mat_scale(matmul(term, m), cplx(1.0 / static_cast<double>(k)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) sum[i][j] += term[i][j];
  }
  return sum;
}

AlgebraBasis algebra_basis() {
  AlgebraBasis b;
  b.qq = derivative_at_identity(0);
  b.e = derivative_at_identity(1);
  b.jplus = derivative_at_identity(2);
  b.jminus = derivative_at_identity(3);
  b.j3 = derivative_at_identity(4);
  return b;
}

std::vector<CommutatorRelation> commutator_table(const AlgebraBasis& b) {
  const IntMatrix5 zero{};
  const IntMatrix5 minus_jminus = int_add(zero, b.jminus, -1);
  const IntMatrix5 two_q = int_add(b.qq, b.qq);
  const IntMatrix5 two_jplus = int_add(b.jplus, b.jplus);

  std::vector<CommutatorRelation> rel = {
      {"[j3,Q] = 2Q", commutator(b.j3, b.qq), two_q, false},
      {"[j3,j+] = j+", commutator(b.j3, b.jplus), b.jplus, false},
      {"[j3,j-] = -j-", commutator(b.j3, b.jminus), minus_jminus, false},
      {"[j-,Q] = 2j+", commutator(b.jminus, b.qq), two_jplus, false},
      {"[j-,j+] = E", commutator(b.jminus, b.jplus), b.e, false},
      {"[j+,Q] = 0", commutator(b.jplus, b.qq), zero, false},
      {"[j3,E] = 0", commutator(b.j3, b.e), zero, false},
      {"[Q,E] = 0", commutator(b.qq, b.e), zero, false},
      {"[j+,E] = 0", commutator(b.jplus, b.e), zero, false},
      {"[j-,E] = 0", commutator(b.jminus, b.e), zero, false},
  };
  for (auto& r : rel) r.holds = r.computed == r.expected;
  return rel;
}

OrderedFactors ordered_factors(const GroupElement& g) {
  OrderedFactors f;
  f.beta = g.beta - 2.0 * g.gamma * g.q;
  f.gamma = g.gamma;
  f.delta = g.delta;
  f.alpha = g.alpha - g.q * g.gamma * g.gamma;
  f.q = g.q * std::exp(-2.0 * g.delta);
  return f;
}

GroupElement from_ordered_factors(const OrderedFactors& f) {
  const cplx e2d = std::exp(2.0 * f.delta);
  GroupElement g;
  g.q = e2d * f.q;
  g.alpha = f.alpha + f.q * f.gamma * f.gamma * e2d;
  g.beta = f.beta + 2.0 * e2d * f.gamma * f.q;
  g.gamma = f.gamma;
  g.delta = f.delta;
  return g;
}

}  // namespace dhermite
