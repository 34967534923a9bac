#include "dhermite/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "harness_internal.hpp"

namespace dhermite {

namespace detail {

std::uint64_t fnv1a(std::uint64_t seed, std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : text) mix(static_cast<unsigned char>(c));
  return h;
}

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json complex_json(std::complex<double> z) {
  return nlohmann::json::array({round15(z.real()), round15(z.imag())});
}

void ReportBuilder::add_trial(double abs_res, double rel_res, bool passed, const nlohmann::json& params,
                              unsigned terms) {
  ++report_.trials;
  report_.max_abs_residual = std::max(report_.max_abs_residual, abs_res);
  report_.max_rel_residual = std::max(report_.max_rel_residual, rel_res);
  report_.truncation_terms_used = std::max(report_.truncation_terms_used, terms);
  if (!passed) all_passed_ = false;
  // NaN residuals must surface as failures and as the worst point.
  const double key = std::isnan(rel_res) ? INFINITY : rel_res + (passed ? 0.0 : 1e300);
  if (key > worst_key_) {
    worst_key_ = key;
    report_.worst_params = params.dump();
  }
}

CheckReport ReportBuilder::finish() {
  report_.status = all_passed_ ? CheckStatus::Pass : CheckStatus::Fail;
  return report_;
}

CheckReport ReportBuilder::finish_printed(bool corrected_passed) {
  if (all_passed_) {
    report_.status = CheckStatus::Pass;
  } else {
    report_.status = corrected_passed ? CheckStatus::ErratumConfirmed : CheckStatus::Fail;
  }
  return report_;
}

}  // namespace detail

namespace {

const std::vector<detail::CheckDef>& registry() {
  static const std::vector<detail::CheckDef> defs = [] {
    std::vector<detail::CheckDef> d;
    detail::register_exact_checks(d);
    detail::register_expansion_checks(d);
    std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return d;
  }();
  return defs;
}

bool kernel_allows(std::string_view id, const std::optional<std::string>& kernel) {
  if (!kernel) return true;
  const bool printed = id.ends_with(".printed");
  const bool corrected = id.ends_with(".corrected");
  if (*kernel == "printed") return printed || !corrected;
  if (*kernel == "corrected") return !printed;
  return true;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ErratumConfirmed: return "erratum-confirmed";
  }
  return "?";
}

std::vector<CheckInfo> check_catalog() {
  std::vector<CheckInfo> out;
  for (const auto& d : registry()) out.push_back({d.id, d.paper_eq});
  return out;
}

std::vector<std::string> resolve_selection(const std::vector<std::string>& selection,
                                           const SuiteOptions& options) {
  if (options.kernel && *options.kernel != "printed" && *options.kernel != "corrected") {
    throw std::invalid_argument("unknown kernel '" + *options.kernel + "' (expected corrected or printed)");
  }
  std::vector<std::string> ids;
  for (const auto& sel : selection) {
    bool matched = false;
    for (const auto& d : registry()) {
      const bool hit = sel == "all" || d.id == sel ||
                       (d.id.size() > sel.size() && d.id.starts_with(sel) && d.id[sel.size()] == '.');
      if (hit) {
        matched = true;
        if (kernel_allows(d.id, options.kernel)) ids.push_back(d.id);
      }
    }
    if (!matched) {
      throw std::invalid_argument("unknown check '" + sel + "'");
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& selection, const SuiteOptions& options) {
  const auto ids = resolve_selection(selection, options);
  std::vector<const detail::CheckDef*> defs;
  for (const auto& id : ids) {
    for (const auto& d : registry()) {
      if (d.id == id) defs.push_back(&d);
    }
  }

  std::vector<CheckReport> reports(defs.size());
  std::vector<std::exception_ptr> errors(defs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < defs.size(); i = next++) {
      try {
        reports[i] = defs[i]->run(options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned n_threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  n_threads = std::clamp<unsigned>(n_threads, 1, static_cast<unsigned>(std::max<std::size_t>(defs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : reports) {
    checks.push_back({
        {"id", r.id},
        {"paper_eq", r.paper_eq},
        {"status", status_name(r.status)},
        {"trials", r.trials},
        {"max_abs_residual", detail::round15(r.max_abs_residual)},
        {"max_rel_residual", detail::round15(r.max_rel_residual)},
        {"worst_params", nlohmann::json::parse(r.worst_params)},
        {"truncation_terms_used", r.truncation_terms_used},
    });
  }
  nlohmann::json doc = {{"suite_seed", seed}, {"checks", checks}};
  return doc.dump(2);
}

bool suite_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

}  // namespace dhermite
