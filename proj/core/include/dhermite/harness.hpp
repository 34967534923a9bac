#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dhermite/lie.hpp"
#include "dhermite/mpoly.hpp"
#include "dhermite/rep.hpp"

namespace dhermite {

enum class CheckStatus { Pass, Fail, ErratumConfirmed };

/// "pass", "fail", "erratum-confirmed".
std::string_view status_name(CheckStatus s);

struct CheckReport {
  std::string id;
  std::string paper_eq;
  CheckStatus status = CheckStatus::Fail;
  unsigned trials = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  std::string worst_params = "{}";  // JSON object
  unsigned truncation_terms_used = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  unsigned trials = 50;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  unsigned lmax = 40;
  unsigned lmax_cap = 160;
  double tail_tol = 1e-13;
  bool adaptive = true;   // extend lmax while the tail is above tail_tol
  unsigned threads = 0;   // 0: hardware concurrency
  unsigned m_max = 15;    // Volterra and operator checks
  unsigned lemma_m_max = 20;
  std::optional<std::string> kernel;  // keep only ".corrected" or ".printed" variants
};

struct CheckInfo {
  std::string id;
  std::string paper_eq;
};

/// Every registered check, sorted by id.
std::vector<CheckInfo> check_catalog();

/// Resolves a selection ("all", an exact id, or a dotted prefix such as
/// "volterra") to ids. Throws std::invalid_argument for an unknown entry.
std::vector<std::string> resolve_selection(const std::vector<std::string>& selection,
                                           const SuiteOptions& options);

/// Runs the selected checks in parallel; reports are sorted by id and depend
/// only on (selection, options), not on scheduling.
std::vector<CheckReport> run_suite(const std::vector<std::string>& selection, const SuiteOptions& options);

/// {"suite_seed": ..., "checks": [...]}, floats at 15 significant digits.
std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed);

bool suite_passed(const std::vector<CheckReport>& reports);

// Exact integral-equation residuals. Zero polynomial means the identity holds.

enum class VolterraKernel { Corrected, Printed };

/// 2 z2 H_m - xi int_0^z1 K(z1, eta) H_m(eta, z2) d eta - 2 xi^p (m!/n!) z1^{m-2n} z2^{n+1},
/// n = floor(m/2). Corrected: K = (m+1) z1 - (m+2) eta, p = m - n.
/// Printed: K = (z1 - eta)((m+1) z1 - (m+2) eta), p = n.
RationalMPoly volterra_residual(unsigned m, VolterraKernel kernel);

/// z2 = -1/2 slice, normalized so the leading term is H_m(z1 | tau).
RationalMPoly volterra_1v_residual(unsigned m, VolterraKernel kernel);

// Series expansions of U(g) H_r t^r.

struct ExpansionSample {
  GroupElement g;  // alpha = delta = 0 for every catalogued expansion
  unsigned r = 0;
  FunctionPoint point;
  double tau = 0.0;
};

struct ExpansionResidual {
  cplx lhs{}, rhs{};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  unsigned terms = 0;
  double regime_mismatch = 0.0;  // |two forms at l = r| relative difference
};

/// Evaluates one catalogued expansion check (e.g. "expansion.laguerre" or
/// "mehler.printed") at a sample. Throws std::invalid_argument for ids that
/// are not expansions.
ExpansionResidual expansion_residual(std::string_view id, const ExpansionSample& sample,
                                     const SuiteOptions& options);

/// Draws the sample the suite would use for trial `trial` of check `id`.
ExpansionSample expansion_sample(std::string_view id, std::uint64_t seed, unsigned trial);

struct ConsistencyWeb {
  unsigned samples = 0;
  double max_diff_q_zero = 0.0;      // theorem vs Laguerre corollary
  double max_diff_beta_zero = 0.0;   // theorem vs q-gamma corollary
  double max_diff_gamma_zero = 0.0;  // theorem vs q-beta corollary
  bool ok = false;
};

/// Compares relative residuals of the theorem-level expansions with those of
/// the corollaries on identical restricted samples; ok iff all differences
/// are within 1e-12.
ConsistencyWeb consistency_web(const SuiteOptions& options, unsigned samples = 50);

}  // namespace dhermite
