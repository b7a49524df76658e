// kneadgen: exact kneading-determinant engine for s-periodic infinite-order
// linear recurrences. Exit codes: 0 success, 1 verification mismatch,
// 2 usage/parse error, 70 internal inconsistency.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kneadgen/errors.hpp"
#include "kneadgen/genfun.hpp"
#include "kneadgen/kneading.hpp"
#include "kneadgen/oracle.hpp"
#include "kneadgen/orbit.hpp"
#include "kneadgen/spec_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kneadgen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 70;

json rf_to_json(const RationalFunction& f) {
  json num = json::array();
  for (const auto& c : f.num().coefficients()) num.push_back(rational_to_string(c));
  if (f.num().is_zero()) num.push_back("0");
  json den = json::array();
  for (const auto& c : f.den().coefficients()) den.push_back(rational_to_string(c));
  return json{{"num", std::move(num)}, {"den", std::move(den)}, {"display", to_string(f)}};
}

json qvec_to_json(const std::vector<BigRational>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rational_to_string(c));
  return out;
}

std::string qvec_to_text(const std::vector<BigRational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += rational_to_string(v[i]);
  }
  return out + ")";
}

json components_to_json(const GeneratingFunctionVector& g) {
  json out = json::array();
  for (const auto& component : g.components) out.push_back(rf_to_json(component));
  return out;
}

void print_components_text(const std::string& label, const GeneratingFunctionVector& g) {
  for (std::size_t alpha = 1; alpha <= g.components.size(); ++alpha) {
    std::cout << "G_" << alpha << "(" << label << ") = "
              << to_string(g.components[alpha - 1]) << "\n";
  }
}

struct VerifyOptions {
  std::int64_t terms = 40;
  std::optional<std::int64_t> beta;
  std::string fault;  // "k:i:j", perturbs A_k(i,j) on the generating-function path
};

// A_k(i,j) += 1 with 1-based i, j. Returns the perturbed spec.
RecurrenceSpec apply_fault(const RecurrenceSpec& spec, const std::string& fault) {
  std::size_t k = 0, i = 0, j = 0;
  const auto first = fault.find(':');
  const auto second = fault.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("--fault expects k:i:j");
  }
  try {
    k = std::stoul(fault.substr(0, first));
    i = std::stoul(fault.substr(first + 1, second - first - 1));
    j = std::stoul(fault.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--fault expects k:i:j with numeric parts");
  }
  const std::size_t p = spec.dimension();
  if (k >= spec.period() || i < 1 || i > p || j < 1 || j > p) {
    throw std::invalid_argument("--fault index out of range");
  }
  std::vector<RationalMatrix> coeffs = spec.coefficients();
  coeffs[k](i - 1, j - 1) += 1;
  return RecurrenceSpec(p, spec.period(), std::move(coeffs));
}

int run_kneading(const RecurrenceSpec& spec, bool json_out) {
  const RatFuncMatrix k = kneading_matrix(spec);
  const std::size_t p = spec.dimension();
  if (json_out) {
    json matrix = json::array();
    for (std::size_t i = 0; i < p; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < p; ++j) row.push_back(rf_to_json(k(i, j)));
      matrix.push_back(std::move(row));
    }
    json increments = json::array();
    for (std::size_t alpha = 1; alpha <= p; ++alpha) {
      for (std::size_t beta = 1; beta <= spec.spanning_count(); ++beta) {
        increments.push_back(json{{"alpha", alpha},
                                  {"beta", beta},
                                  {"value", rf_to_json(kneading_increment(spec, alpha, beta))}});
      }
    }
    std::cout << json{{"p", p},
                      {"s", spec.period()},
                      {"matrix", std::move(matrix)},
                      {"increments", std::move(increments)}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "K =\n";
  for (std::size_t i = 0; i < p; ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < p; ++j) {
      if (j > 0) std::cout << "  ";
      std::cout << " " << to_string(k(i, j));
    }
    std::cout << " ]\n";
  }
  for (std::size_t alpha = 1; alpha <= p; ++alpha) {
    for (std::size_t beta = 1; beta <= spec.spanning_count(); ++beta) {
      std::cout << "K(" << alpha << "," << beta
                << ") = " << to_string(kneading_increment(spec, alpha, beta)) << "\n";
    }
  }
  return kExitOk;
}

int run_delta(const RecurrenceSpec& spec, std::optional<std::int64_t> alpha,
              std::optional<std::int64_t> beta, bool json_out) {
  if (alpha.has_value()) {
    const RationalFunction d = extended_kneading_determinant(
        spec, static_cast<std::size_t>(*alpha), static_cast<std::size_t>(*beta));
    if (json_out) {
      std::cout << json{{"alpha", *alpha}, {"beta", *beta}, {"delta", rf_to_json(d)}}.dump(2)
                << "\n";
    } else {
      std::cout << "Delta_" << *alpha << "(" << *beta << ") = " << to_string(d) << "\n";
    }
    return kExitOk;
  }
  const RationalFunction d = kneading_determinant(spec);
  if (json_out) {
    std::cout << json{{"delta", rf_to_json(d)}}.dump(2) << "\n";
  } else {
    std::cout << "Delta = " << to_string(d) << "\n";
  }
  return kExitOk;
}

int run_genfun(const RecurrenceSpec& spec, std::int64_t beta, bool json_out) {
  const auto g = generating_function(spec, static_cast<std::size_t>(beta));
  if (json_out) {
    std::cout << json{{"beta", beta}, {"components", components_to_json(g)}}.dump(2) << "\n";
  } else {
    print_components_text("e_" + std::to_string(beta), g);
  }
  return kExitOk;
}

int run_spanning(const RecurrenceSpec& spec, bool json_out) {
  const auto span = spanning_set(spec);
  if (json_out) {
    json vectors = json::array();
    for (std::size_t beta = 1; beta <= span.size(); ++beta) {
      vectors.push_back(
          json{{"beta", beta}, {"components", components_to_json(span[beta - 1])}});
    }
    std::cout << json{{"count", span.size()}, {"vectors", std::move(vectors)}}.dump(2) << "\n";
  } else {
    for (std::size_t beta = 1; beta <= span.size(); ++beta) {
      print_components_text("e_" + std::to_string(beta), span[beta - 1]);
    }
  }
  return kExitOk;
}

int run_basis(const RecurrenceSpec& spec, bool json_out) {
  const BasisReport report = basis_and_dimension(spec);
  if (json_out) {
    json basis = json::array();
    for (std::size_t beta : report.selected_betas) {
      basis.push_back(json{{"beta", beta},
                           {"components", components_to_json(report.spanning[beta - 1])}});
    }
    std::cout << json{{"dimension", report.dimension},
                      {"selected_betas", report.selected_betas},
                      {"basis", std::move(basis)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "dimension: " << report.dimension << "\nselected betas:";
    for (std::size_t beta : report.selected_betas) std::cout << " " << beta;
    std::cout << "\n";
    for (std::size_t beta : report.selected_betas) {
      print_components_text("e_" + std::to_string(beta), report.spanning[beta - 1]);
    }
  }
  return kExitOk;
}

int run_dim(const RecurrenceSpec& spec, bool json_out) {
  const BasisReport report = basis_and_dimension(spec);
  if (json_out) {
    std::cout << json{{"dimension", report.dimension}}.dump(2) << "\n";
  } else {
    std::cout << report.dimension << "\n";
  }
  return kExitOk;
}

int run_verify(const RecurrenceSpec& spec, const VerifyOptions& options, bool json_out) {
  const RecurrenceSpec series_spec =
      options.fault.empty() ? spec : apply_fault(spec, options.fault);
  std::vector<std::size_t> betas;
  if (options.beta.has_value()) {
    betas.push_back(static_cast<std::size_t>(*options.beta));
  } else {
    for (std::size_t beta = 1; beta <= spec.spanning_count(); ++beta) betas.push_back(beta);
  }
  const auto order = static_cast<std::size_t>(options.terms);

  json results = json::array();
  std::size_t failures = 0;
  for (std::size_t beta : betas) {
    const VerificationReport report = verify(series_spec, spec, beta, order);
    if (json_out) {
      json entry{{"beta", beta}, {"passed", report.passed}};
      if (!report.passed) {
        entry["mismatch_index"] = report.mismatch_index;
        entry["series"] = qvec_to_json(report.series_value);
        entry["orbit"] = qvec_to_json(report.orbit_value);
      }
      results.push_back(std::move(entry));
    } else if (report.passed) {
      std::cout << "PASS β=" << beta << "\n";
    } else {
      std::cout << "FAIL β=" << beta << " at n=" << report.mismatch_index
                << ": series=" << qvec_to_text(report.series_value)
                << " orbit=" << qvec_to_text(report.orbit_value) << "\n";
    }
    if (!report.passed) ++failures;
  }
  if (json_out) {
    std::cout << json{{"terms", options.terms},
                      {"results", std::move(results)},
                      {"all_passed", failures == 0}}
                     .dump(2)
              << "\n";
  } else if (!options.beta.has_value()) {
    if (failures == 0) {
      std::cout << "PASS β=1.." << spec.spanning_count() << "\n";
    } else {
      std::cout << "FAIL " << failures << "/" << betas.size() << "\n";
    }
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_taylor(const RecurrenceSpec& spec, std::int64_t beta, std::int64_t terms,
               bool json_out) {
  const auto g = generating_function(spec, static_cast<std::size_t>(beta));
  const auto series = taylor(g, static_cast<std::size_t>(terms));
  if (json_out) {
    json coefficients = json::array();
    for (const auto& v : series) coefficients.push_back(qvec_to_json(v));
    std::cout << json{{"beta", beta},
                      {"terms", terms},
                      {"coefficients", std::move(coefficients)}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t n = 0; n < series.size(); ++n) {
      std::cout << n << ": " << qvec_to_text(series[n]) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact kneading determinants, generating functions and basis extraction\n"
               "for s-periodic infinite-order linear recurrences over Q."};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global --spec/--json after the subcommand too

  std::string spec_path;
  bool json_out = false;
  app.add_option("--spec", spec_path, "Recurrence spec JSON file")->required();
  app.add_flag("--json", json_out, "Emit machine-readable JSON");

  auto* cmd_kneading = app.add_subcommand(
      "kneading", "Print the kneading matrix K and all increments K(alpha,beta)");

  auto* cmd_delta =
      app.add_subcommand("delta", "Print Delta, or Delta_alpha(beta) with --alpha/--beta");
  std::optional<std::int64_t> delta_alpha, delta_beta;
  auto* delta_alpha_opt = cmd_delta->add_option("--alpha", delta_alpha, "Row index 1..p");
  auto* delta_beta_opt = cmd_delta->add_option("--beta", delta_beta, "Basis index >= 1");
  delta_alpha_opt->needs(delta_beta_opt);
  delta_beta_opt->needs(delta_alpha_opt);

  auto* cmd_genfun = app.add_subcommand("genfun", "Print G(e_beta)");
  std::int64_t genfun_beta = 0;
  cmd_genfun->add_option("--beta", genfun_beta, "Basis index >= 1")->required();

  auto* cmd_spanning =
      app.add_subcommand("spanning", "Print the spanning set G(e_1)..G(e_{(s+1)p})");
  auto* cmd_basis = app.add_subcommand("basis", "Print a basis of the space and its dimension");
  auto* cmd_dim = app.add_subcommand("dim", "Print dim of the generating-function space");

  auto* cmd_verify = app.add_subcommand(
      "verify", "Check Taylor coefficients of G(e_beta) against direct iteration");
  VerifyOptions verify_options;
  cmd_verify->add_option("--terms", verify_options.terms, "Series depth (default 40)");
  cmd_verify->add_option("--beta", verify_options.beta, "Single basis index to check");
  cmd_verify->add_option("--fault", verify_options.fault,
                         "Diagnostic: perturb A_k(i,j) (format k:i:j) on the "
                         "generating-function path only");

  auto* cmd_taylor = app.add_subcommand("taylor", "Print Taylor coefficients of G(e_beta)");
  std::int64_t taylor_beta = 0, taylor_terms = 0;
  cmd_taylor->add_option("--beta", taylor_beta, "Basis index >= 1")->required();
  cmd_taylor->add_option("--terms", taylor_terms, "Series depth")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Range checks shared by the beta/terms options.
  for (const auto& [value, name] :
       {std::pair<std::optional<std::int64_t>, const char*>{delta_alpha, "alpha"},
        {delta_beta, "beta"},
        {cmd_genfun->parsed() ? std::optional<std::int64_t>(genfun_beta) : std::nullopt, "beta"},
        {verify_options.beta, "beta"},
        {cmd_taylor->parsed() ? std::optional<std::int64_t>(taylor_beta) : std::nullopt,
         "beta"}}) {
    if (value.has_value() && *value < 1) {
      std::cerr << "error: " << name << " must be ≥ 1\n";
      return kExitUsage;
    }
  }
  if (verify_options.terms < 0 || taylor_terms < 0) {
    std::cerr << "error: terms must be ≥ 0\n";
    return kExitUsage;
  }

  try {
    const RecurrenceSpec spec = load_spec_file(spec_path);
    if (cmd_kneading->parsed()) return run_kneading(spec, json_out);
    if (cmd_delta->parsed()) return run_delta(spec, delta_alpha, delta_beta, json_out);
    if (cmd_genfun->parsed()) return run_genfun(spec, genfun_beta, json_out);
    if (cmd_spanning->parsed()) return run_spanning(spec, json_out);
    if (cmd_basis->parsed()) return run_basis(spec, json_out);
    if (cmd_dim->parsed()) return run_dim(spec, json_out);
    if (cmd_verify->parsed()) return run_verify(spec, verify_options, json_out);
    if (cmd_taylor->parsed()) return run_taylor(spec, taylor_beta, taylor_terms, json_out);
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
