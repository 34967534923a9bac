#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dhermite/harness.hpp"
#include "json.hpp"

namespace dhermite::detail {

struct CheckDef {
  std::string id;
  std::string paper_eq;
  std::function<CheckReport(const SuiteOptions&)> run;
};

void register_exact_checks(std::vector<CheckDef>& out);
void register_expansion_checks(std::vector<CheckDef>& out);

std::uint64_t fnv1a(std::uint64_t seed, std::string_view text);

/// Deterministic per-check stream; uniform() has 53 random bits.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream) : engine_(fnv1a(seed, stream)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  unsigned below(unsigned n) { return static_cast<unsigned>(uniform() * n); }
  std::complex<double> complex_box(double half) {
    const double re = uniform(-half, half);
    return {re, uniform(-half, half)};
  }

 private:
  std::mt19937_64 engine_;
};

/// Value rounded to 15 significant digits, so JSON output is stable.
double round15(double x);

nlohmann::json complex_json(std::complex<double> z);

/// Running maxima over trials.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::string paper_eq) {
    report_.id = std::move(id);
    report_.paper_eq = std::move(paper_eq);
  }

  void add_trial(double abs_res, double rel_res, bool passed, const nlohmann::json& params,
                 unsigned terms = 0);

  bool all_passed() const { return all_passed_; }

  /// pass iff every trial passed, otherwise fail.
  CheckReport finish();
  /// For a printed variant: pass if every trial passed; erratum-confirmed if
  /// some trial failed while the corrected sibling passed everywhere; fail
  /// otherwise.
  CheckReport finish_printed(bool corrected_passed);

 private:
  CheckReport report_;
  bool all_passed_ = true;
  double worst_key_ = -1.0;
};

/// Random element for matrix-element cross-checks, restricted by i % 4.
GroupElement cross_check_element(Rng& rng, unsigned i);

}  // namespace dhermite::detail
