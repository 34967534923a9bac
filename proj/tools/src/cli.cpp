#include "dhermite_cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "dhermite/harness.hpp"
#include "dhermite/lie.hpp"
#include "dhermite/polys.hpp"
#include "dhermite/rep.hpp"
#include "json.hpp"

namespace dhermite::cli {

namespace {

using nlohmann::json;

/// Bad input detected after parsing; reported like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

double round15(double x) { return std::strtod(fmt(x).c_str(), nullptr); }

/// --name / --name-re and --name-im pair.
struct ComplexArg {
  double re = 0.0, im = 0.0;
  cplx value() const { return {re, im}; }
};

void add_complex(CLI::App* app, const std::string& name, ComplexArg& arg, const std::string& what,
                 double default_re = 0.0) {
  arg.re = default_re;
  app->add_option("--" + name + ",--" + name + "-re", arg.re, what + " (real part)");
  app->add_option("--" + name + "-im", arg.im, what + " (imaginary part)");
}

struct GroupArgs {
  ComplexArg q, alpha, beta, gamma, delta;

  void attach(CLI::App* app) {
    add_complex(app, "q", q, "group parameter q");
    add_complex(app, "alpha", alpha, "group parameter alpha");
    add_complex(app, "beta", beta, "group parameter beta");
    add_complex(app, "gamma", gamma, "group parameter gamma");
    add_complex(app, "delta", delta, "group parameter delta");
  }

  GroupElement element() const {
    return {q.value(), alpha.value(), beta.value(), gamma.value(), delta.value()};
  }
};

PolyFamily family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

DegenerateParam degenerate(cplx tau) {
  if (tau == cplx(-1.0)) throw UsageError("tau must not be -1");
  return DegenerateParam::from_tau(tau);
}

cplx evaluate_family(PolyFamily f, unsigned m, const std::map<std::string, cplx>& v) {
  const auto& at = [&v](const char* k) { return v.at(k); };
  switch (f) {
    case PolyFamily::HermiteClassical: return hermite_classical(m, at("z"));
    case PolyFamily::HermiteNumber: return ratio_to_double(hermite_number(m).get_num(), hermite_number(m).get_den());
    case PolyFamily::Hermite2V: return hermite_2v(m, at("z1"), at("z2"));
    case PolyFamily::DHP2V: return dhp_2v(m, at("z1"), at("z2"), degenerate(at("tau")));
    case PolyFamily::DHP1V: return dhp_1v(m, at("z1"), degenerate(at("tau")));
    case PolyFamily::LaguerreGen: return laguerre_gen(m, at("alpha"), at("x"));
    case PolyFamily::Confluent1F1: return confluent_1f1(at("a"), at("c"), at("x"));
    case PolyFamily::LauricellaF111: {
      const auto l = static_cast<unsigned>(at("l").real());
      const auto r = static_cast<unsigned>(at("r").real());
      if (l > r) throw UsageError("lauricella needs l <= r");
      return lauricella_f111(l, r, at("x1"), at("x2"));
    }
  }
  return {};
}

RationalMPoly exact_family(PolyFamily f, unsigned m) {
  switch (f) {
    case PolyFamily::HermiteClassical: return hermite_classical_exact(m);
    case PolyFamily::HermiteNumber: return RationalMPoly(hermite_number(m));
    case PolyFamily::Hermite2V: return hermite_2v_exact(m);
    case PolyFamily::DHP2V: return dhp_2v_exact(m);
    case PolyFamily::DHP1V: return dhp_1v_exact(m);
    default: throw UsageError("family '" + std::string(family_name(f)) + "' has no exact coefficients");
  }
}

json int_matrix_json(const IntMatrix5& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(json(std::vector<long long>(row.begin(), row.end())));
  return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate two-variable Hermite polynomials: evaluation, matrix elements and identity checks",
               "dhermite"};
  app.require_subcommand(1);

  // eval
  std::string family;
  unsigned m = 0;
  ComplexArg z, z1, z2, tau, alpha, x, a, c, x1, x2;
  unsigned l_index = 0, r_index = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial family at a point");
  eval->add_option("--family", family, "hermite, hermite-number, hermite2, dhp2, dhp1, laguerre, 1f1, lauricella")
      ->required();
  eval->add_option("--m", m, "degree");
  add_complex(eval, "z", z, "argument of the classical Hermite polynomial");
  add_complex(eval, "z1", z1, "first variable");
  add_complex(eval, "z2", z2, "second variable");
  add_complex(eval, "tau", tau, "degenerate parameter");
  add_complex(eval, "alpha", alpha, "Laguerre parameter");
  add_complex(eval, "x", x, "argument of laguerre and 1f1");
  add_complex(eval, "a", a, "1f1 numerator parameter");
  add_complex(eval, "c", c, "1f1 denominator parameter", 1.0);
  add_complex(eval, "x1", x1, "first lauricella argument");
  add_complex(eval, "x2", x2, "second lauricella argument");
  eval->add_option("--l", l_index, "lauricella row index");
  eval->add_option("--r", r_index, "lauricella column index");

  // coeffs
  std::string coeff_family;
  unsigned coeff_m = 0;
  auto* coeffs = app.add_subcommand("coeffs", "Print exact coefficients as JSON");
  coeffs->add_option("--family", coeff_family, "hermite, hermite-number, hermite2, dhp2, dhp1")->required();
  coeffs->add_option("--m", coeff_m, "degree")->required();

  // tabulate
  std::string tab_family = "dhp2";
  unsigned tab_m_max = 5;
  double tab_from = -1.0, tab_to = 1.0;
  unsigned tab_steps = 5;
  double tab_z2 = 1.0, tab_tau = 0.0;
  auto* tabulate = app.add_subcommand("tabulate", "CSV table of values over degrees and a z1 grid");
  tabulate->add_option("--family", tab_family, "dhp2, dhp1, hermite2 or hermite");
  tabulate->add_option("--m-max", tab_m_max, "largest degree");
  tabulate->add_option("--z1-from", tab_from, "first grid point");
  tabulate->add_option("--z1-to", tab_to, "last grid point");
  tabulate->add_option("--steps", tab_steps, "number of grid points")->check(CLI::PositiveNumber);
  tabulate->add_option("--z2", tab_z2, "second variable");
  tabulate->add_option("--tau", tab_tau, "degenerate parameter");

  // matrix-elements
  GroupArgs group;
  ComplexArg mu, omega;
  unsigned lmax = 4, rmax = 4;
  std::string method;
  auto* matrix = app.add_subcommand("matrix-elements", "CSV table of A_lr(g) against the series oracle");
  group.attach(matrix);
  add_complex(matrix, "mu", mu, "representation parameter mu", 1.0);
  add_complex(matrix, "omega", omega, "representation parameter omega");
  matrix->add_option("--lmax", lmax, "largest row index");
  matrix->add_option("--rmax", rmax, "largest column index");
  matrix->add_option("--method", method, "force one closed form (default: per-cell choice)");

  // verify
  std::vector<std::string> checks;
  std::optional<std::string> kernel;
  SuiteOptions suite;
  std::string output;
  auto* verify = app.add_subcommand("verify", "Run identity checks and print a JSON report");
  verify->add_option("--check", checks, "check id or prefix, repeatable (default: all)");
  verify->add_option("--kernel", kernel, "keep only corrected or printed variants")
      ->check(CLI::IsMember({"corrected", "printed"}));
  verify->add_option("--m-max", suite.m_max, "largest degree for integral-equation and operator checks");
  verify->add_option("--seed", suite.seed, "random seed");
  verify->add_option("--trials", suite.trials, "random trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", suite.rel_tol, "relative tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--lmax", suite.lmax, "initial series truncation")->check(CLI::Range(2u, 160u));
  verify->add_option("--threads", suite.threads, "worker threads (0: all cores)");
  verify->add_option("-o,--output", output, "write the report to a file instead of stdout");
  verify->add_flag("--list", "list check ids and exit");

  // lie
  std::string lie_format = "json";
  unsigned lie_samples = 100;
  std::uint64_t lie_seed = 42;
  auto* lie = app.add_subcommand("lie", "Algebra basis, commutator table and group closure test");
  lie->add_option("--format", lie_format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  lie->add_option("--samples", lie_samples, "random group elements for the closure test");
  lie->add_option("--seed", lie_seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dhermite: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      const PolyFamily f = family_or_throw(family);
      const std::map<std::string, cplx> v = {
          {"z", z.value()},   {"z1", z1.value()},        {"z2", z2.value()},         {"tau", tau.value()},
          {"alpha", alpha.value()}, {"x", x.value()},    {"a", a.value()},           {"c", c.value()},
          {"x1", x1.value()}, {"x2", x2.value()},        {"l", cplx(l_index)},       {"r", cplx(r_index)}};
      out << fmt(evaluate_family(f, m, v)) << "\n";
      return 0;
    }

    if (*coeffs) {
      out << poly_to_json(exact_family(family_or_throw(coeff_family), coeff_m)) << "\n";
      return 0;
    }

    if (*tabulate) {
      const PolyFamily f = family_or_throw(tab_family);
      if (f != PolyFamily::DHP2V && f != PolyFamily::DHP1V && f != PolyFamily::Hermite2V &&
          f != PolyFamily::HermiteClassical) {
        throw UsageError("tabulate supports dhp2, dhp1, hermite2 and hermite");
      }
      const double z2v = f == PolyFamily::DHP1V ? -0.5 : tab_z2;
      out << "m,z1,z2,tau,value_re,value_im\n";
      for (unsigned k = 0; k <= tab_m_max; ++k) {
        for (unsigned i = 0; i < tab_steps; ++i) {
          const double zz = tab_steps == 1 ? tab_from : tab_from + (tab_to - tab_from) * i / (tab_steps - 1);
          const std::map<std::string, cplx> v = {{"z", zz}, {"z1", zz}, {"z2", z2v}, {"tau", tab_tau}};
          const cplx val = evaluate_family(f, k, v);
          out << k << "," << fmt(zz) << "," << fmt(z2v) << "," << fmt(tab_tau) << "," << fmt(val.real()) << ","
              << fmt(val.imag()) << "\n";
        }
      }
      return 0;
    }

    if (*matrix) {
      const GroupElement g = group.element();
      const RepParams rp(omega.value(), mu.value());
      std::optional<MatrixMethod> forced;
      if (!method.empty()) {
        forced = parse_method(method);
        if (!forced) throw UsageError("unknown method '" + method + "'");
      }
      MatrixElementTable table = build_matrix_element_table(g, rp, lmax, rmax);
      if (forced) {
        table.max_rel_err = 0.0;
        for (auto& cell : table.cells) {
          cell.method = *forced;
          cell.value = *forced == MatrixMethod::Oracle ? cell.oracle : matrix_element(*forced, g, rp, cell.l, cell.r);
          cell.rel_err = relative_difference(cell.value, cell.oracle);
          table.max_rel_err = std::max(table.max_rel_err, cell.rel_err);
        }
      }
      out << "l,r,method,value_re,value_im,oracle_re,oracle_im,rel_err\n";
      for (const auto& cell : table.cells) {
        out << cell.l << "," << cell.r << "," << method_tag(cell.method) << "," << fmt(cell.value.real()) << ","
            << fmt(cell.value.imag()) << "," << fmt(cell.oracle.real()) << "," << fmt(cell.oracle.imag()) << ","
            << fmt(cell.rel_err) << "\n";
      }
      out << "max,,,,,,," << fmt(table.max_rel_err) << "\n";
      return 0;
    }

    if (*verify) {
      if (verify->count("--list") > 0) {
        for (const auto& info : check_catalog()) out << info.id << "\t" << info.paper_eq << "\n";
        return 0;
      }
      suite.kernel = kernel;
      if (checks.empty()) checks.push_back("all");
      try {
        resolve_selection(checks, suite);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto reports = run_suite(checks, suite);
      const std::string doc = reports_to_json(reports, suite.seed);
      if (output.empty()) {
        out << doc << "\n";
      } else {
        std::ofstream file(output);
        if (!file) throw UsageError("cannot write '" + output + "'");
        file << doc << "\n";
      }
      return suite_passed(reports) ? 0 : 1;
    }

    if (*lie) {
      const AlgebraBasis basis = algebra_basis();
      const auto table = commutator_table(basis);
      std::mt19937_64 rng(lie_seed);
      std::uniform_real_distribution<double> box(-0.5, 0.5);
      auto draw = [&] { return cplx(box(rng), box(rng)); };
      double round_trip = 0.0, inverse = 0.0, assoc = 0.0;
      for (unsigned i = 0; i < lie_samples; ++i) {
        const GroupElement g1{draw(), draw(), draw(), draw(), draw()};
        const GroupElement g2{draw(), draw(), draw(), draw(), draw()};
        const GroupElement g3{draw(), draw(), draw(), draw(), draw()};
        round_trip = std::max(round_trip, max_abs_diff(extract_params(realize(g1)), g1));
        inverse = std::max(inverse, max_abs_diff(group_mul(g1, group_inv(g1)), GroupElement::identity()));
        assoc = std::max(assoc, max_abs_diff(group_mul(group_mul(g1, g2), g3), group_mul(g1, group_mul(g2, g3))));
      }
      const bool closure_ok = std::max({round_trip, inverse, assoc}) <= 1e-12;
      const bool all_hold = std::all_of(table.begin(), table.end(), [](const auto& r) { return r.holds; });

      if (lie_format == "pretty") {
        const std::pair<const char*, const IntMatrix5*> named[] = {
            {"j+", &basis.jplus}, {"j-", &basis.jminus}, {"j3", &basis.j3}, {"E", &basis.e}, {"Q", &basis.qq}};
        for (const auto& [name, mat] : named) {
          out << name << ":\n";
          for (const auto& row : *mat) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "  ") << row[j];
            out << "\n";
          }
        }
        out << "E has 2 at (0,3): the realization carries 2*alpha in that slot; a unit entry breaks [j-,j+] = E\n";
        for (const auto& rel : table) out << (rel.holds ? "pass  " : "FAIL  ") << rel.name << "\n";
        out << "closure over " << lie_samples << " samples: round trip " << fmt(round_trip) << ", inverse "
            << fmt(inverse) << ", associativity " << fmt(assoc) << (closure_ok ? " (pass)" : " (FAIL)") << "\n";
      } else {
        json rels = json::array();
        for (const auto& rel : table) rels.push_back({{"relation", rel.name}, {"holds", rel.holds}});
        json doc = {
            {"basis",
             {{"jplus", int_matrix_json(basis.jplus)},
              {"jminus", int_matrix_json(basis.jminus)},
              {"j3", int_matrix_json(basis.j3)},
              {"e", int_matrix_json(basis.e)},
              {"qq", int_matrix_json(basis.qq)}}},
            {"basis_note", "e has entry 2 at (0,3) because the realization carries 2*alpha there; "
                           "a unit entry would break [j-,j+] = e"},
            {"commutators", rels},
            {"commutators_pass", all_hold},
            {"closure",
             {{"samples", lie_samples},
              {"max_round_trip_error", round15(round_trip)},
              {"max_inverse_error", round15(inverse)},
              {"max_associativity_error", round15(assoc)},
              {"pass", closure_ok}}}};
        out << doc.dump(2) << "\n";
      }
      return all_hold && closure_ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "dhermite: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "dhermite: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "dhermite: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dhermite::cli
