#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dhermite/mpoly.hpp"
#include "dhermite/series.hpp"

namespace dhermite {

/// xi(tau) = log(1+tau)/tau on the principal branch, with xi(0) = 1.
/// Throws std::domain_error at tau = -1.
cplx xi_of_tau(cplx tau);

struct DegenerateParam {
  cplx tau{};
  cplx xi{1.0};

  static DegenerateParam from_tau(cplx tau) { return {tau, xi_of_tau(tau)}; }
};

enum class PolyFamily {
  HermiteClassical,
  HermiteNumber,
  Hermite2V,
  DHP2V,
  DHP1V,
  LaguerreGen,
  Confluent1F1,
  LauricellaF111,
};

/// CLI names: hermite, hermite-number, hermite2, dhp2, dhp1, laguerre, 1f1,
/// lauricella.
std::string_view family_name(PolyFamily f);
std::optional<PolyFamily> parse_family(std::string_view name);
bool family_has_exact(PolyFamily f);

// Classical Hermite H_m(z) = m! sum (-1)^s (2z)^{m-2s} / (s!(m-2s)!).
cplx hermite_classical(unsigned m, cplx z);
RationalMPoly hermite_classical_exact(unsigned m);  // in z1
BigRational hermite_number(unsigned m);

// Two-variable Hermite H_m(z1, z2) = m! sum z1^{m-2s} z2^s / (s!(m-2s)!).
cplx hermite_2v(unsigned m, cplx z1, cplx z2);
RationalMPoly hermite_2v_exact(unsigned m);

// Degenerate two-variable Hermite polynomials; xi enters as xi^{m-s}.
cplx dhp_2v(unsigned m, cplx z1, cplx z2, const DegenerateParam& p);
cplx dhp_2v_xi(unsigned m, cplx z1, cplx z2, cplx xi);
/// H_0..H_mmax via H_{m+1} = xi z1 H_m + 2 xi z2 m H_{m-1}.
std::vector<cplx> dhp_2v_sequence(unsigned mmax, cplx z1, cplx z2, cplx xi);
RationalMPoly dhp_2v_exact(unsigned m);

// One-variable degenerate Hermite: the z2 = -1/2 slice.
cplx dhp_1v(unsigned m, cplx z1, const DegenerateParam& p);
RationalMPoly dhp_1v_exact(unsigned m);

enum class SpecialValue { Z1Zero, Z2Zero, DZ1AtZ1Zero };
RationalMPoly dhp_special_value(unsigned m, SpecialValue which);

/// Generalized Laguerre L_n^{(alpha)}(x); the binomial uses a falling
/// factorial, so negative integer alpha is fine.
cplx laguerre_gen(unsigned n, cplx alpha, cplx x);

/// 1F1(a; c; x). Finite sum when a is a nonpositive integer; otherwise summed
/// until the term falls below tol * |sum|. Throws std::domain_error for a
/// nonterminating series with c a nonpositive integer.
cplx confluent_1f1(cplx a, cplx c, cplx x, double tol = 1e-17);

/// Terminating double series
///   sum_{2s+k<=l} l!(r-l)! / ((r-l+2s+k)!(l-2s-k)!) x1^s (-x2)^k / (s!k!).
/// Throws std::invalid_argument if l > r.
cplx lauricella_f111(unsigned l, unsigned r, cplx x1, cplx x2);
/// Same value summed from the Pochhammer ratios (-l)_n / (r-l+1)_n.
cplx lauricella_f111_pochhammer(unsigned l, unsigned r, cplx x1, cplx x2);

/// Index weights of a double series with parameter blocks
/// [(a):v,phi] [(b):psi] [(b'):psi'] over [(c):delta,eps] [(d):eta] [(d'):eta'].
struct LauricellaShape {
  std::vector<double> v, phi;       // numerator block a
  std::vector<double> psi;          // b
  std::vector<double> psi_prime;    // b'
  std::vector<double> delta, eps;   // denominator block c
  std::vector<double> eta;          // d
  std::vector<double> eta_prime;    // d'
};

/// The A=B=B'=C=D=D'=1 shape used for the matrix elements.
LauricellaShape lauricella_matrix_element_shape();
bool lauricella_convergence_ok(const LauricellaShape& shape);

}  // namespace dhermite
