#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supm/families.hpp"
#include "supm/parser.hpp"
#include "supm/report.hpp"

namespace {

using namespace supm;

constexpr int kExitInputError = 3;

struct OutputOptions {
  bool json = false;
};

void emit(const Report& report, const OutputOptions& out) {
  if (out.json)
    std::cout << report_to_json(report) << "\n";
  else
    std::cout << report_to_text(report);
}

ChainOptions make_chain_options(const std::vector<std::string>& theorems, bool any_pair) {
  ChainOptions opts;
  opts.any_pair = any_pair;
  for (const auto& name : theorems) {
    auto id = theorem_id_from_string(name);
    if (!id) throw std::invalid_argument("unknown theorem id: " + name);
    opts.theorems.insert(*id);
  }
  return opts;
}

int run_check_on(const Poly& p, const ChainOptions& opts, const OutputOptions& out,
                 const std::string& command) {
  if (p.is_zero() || p.degree() < 2) {
    Report report;
    report.command = command;
    report.input_echo = render_poly(p);
    report.notes.push_back(
        "degree < 2: no critical structure to certify. Degree-1 polynomials are "
        "uniqueness polynomials, but a*z + b never determines the function under "
        "scaling (c*P(g) is again of the form P(h)), so no strong-uniqueness "
        "certificate exists; higher-degree input is required.");
    emit(report, out);
    return 2;
  }
  Report report = analyze_and_certify(p, opts, command);
  emit(report, out);
  return report_exit_code(report);
}

GaussianRational scalar_arg(const std::string& text, const std::string& name) {
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    throw std::invalid_argument("parameter " + name + ": " + e.what());
  }
}

int cmd_check(const std::string& poly_text, const std::vector<std::string>& theorems,
              bool any_pair, char var, const OutputOptions& out) {
  Poly p;
  try {
    p = parse_poly(poly_text, var);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  }
  return run_check_on(p, make_chain_options(theorems, any_pair), out, "check");
}

int cmd_family(const std::string& family_name,
               const std::vector<std::pair<std::string, std::string>>& params,
               const std::vector<std::string>& theorems, bool any_pair,
               const OutputOptions& out) {
  auto id = family_id_from_string(family_name);
  if (!id) {
    std::cerr << "unknown family: " << family_name << " (see list-families)\n";
    return kExitInputError;
  }
  FamilySpec spec{*id, {}};
  for (const auto& [key, value] : params) spec.params[key] = scalar_arg(value, key);
  Poly p;
  try {
    p = construct_family(spec);
  } catch (const FamilyViolation& e) {
    std::cerr << "family " << family_name << ": " << e.what() << "\n";
    return kExitInputError;
  }
  return run_check_on(p, make_chain_options(theorems, any_pair), out, "family");
}

int cmd_lemma(const std::string& lemma_id, long n, const std::string& a_text,
              const OutputOptions& out) {
  Report report;
  report.command = "lemma";
  Report::LemmaSection section;
  section.lemma_id = lemma_id;
  LemmaResult result;
  if (lemma_id == "l3_2") {
    report.input_echo = "psi with A = 1, n = " + std::to_string(n);
    result = verify_lemma_3_2_structure(n);
  } else {
    if (a_text.empty()) throw std::invalid_argument("lemma " + lemma_id + " requires --A");
    GaussianRational a = scalar_arg(a_text, "A");
    report.input_echo = "psi with A = " + a.str() + ", n = " + std::to_string(n);
    if (lemma_id == "l3_1")
      result = verify_lemma_3_1(n, a);
    else if (lemma_id == "l3_3")
      result = verify_lemma_3_3(n, a);
    else
      throw std::invalid_argument("unknown lemma id: " + lemma_id);
  }
  section.holds = result.holds;
  section.witness = result.witness;
  report.lemma = section;
  emit(report, out);
  return result.holds ? 0 : 2;
}

int cmd_urs(long n, long k, const std::string& l_text, const std::string& theta_text,
            bool entire, const OutputOptions& out) {
  if (n < 1 || k < 1) throw std::invalid_argument("urs requires n >= 1 and k >= 1");
  UrsParams params;
  if (l_text == "inf" || l_text == "infinity")
    params.l = kUrsLevelInfinity;
  else {
    long l = std::stol(l_text);
    if (l < 1) throw std::invalid_argument("l must be >= 1 or 'inf'");
    params.l = static_cast<unsigned>(l);
  }
  if (!theta_text.empty()) {
    GaussianRational theta = scalar_arg(theta_text, "theta");
    if (!theta.is_rational())
      throw std::invalid_argument("theta must be a rational number in [0, 1]");
    params.theta_min = theta.re();
  }

  Report report;
  report.command = "urs";
  report.input_echo = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                      ", l = " + (params.l == kUrsLevelInfinity ? "inf" : std::to_string(params.l)) +
                      (entire ? ", entire" : ", meromorphic");
  report.notes.push_back(
      "standing hypotheses assumed: zero set of a certified strong uniqueness "
      "polynomial with simple zeros, and k >= 3 or k = 2 with no simple zero of P'");

  UrsParams cardinality = params;
  cardinality.theta_min.reset();
  report.certificates.push_back(check_urs_thresholds(n, k, cardinality, entire));
  if (params.theta_min)
    report.certificates.push_back(check_urs_thresholds(n, k, params, entire));

  // Threshold table across truncation levels.
  auto row = [&](const char* label, long mero, long ent) {
    report.notes.push_back(std::string(label) + ": URSM needs n > " + std::to_string(mero) +
                           (n > mero ? " (yes" : " (no") + " at n = " + std::to_string(n) +
                           "); URSE needs n > " + std::to_string(ent) +
                           (n > ent ? " (yes)" : " (no)"));
  };
  row("l >= 3 or inf", 2 * k + 6, 2 * k + 2);
  row("l = 2", 2 * k + 7, 2 * k + 2);
  row("l = 1", 2 * k + 10, 2 * k + 4);
  row("ignoring multiplicities", 2 * k + 12, 2 * k + 5);

  for (const auto& cert : report.certificates) {
    if (cert.verdict == Verdict::Certified) {
      report.overall = cert.conclusion;
      report.certified_by = cert.theorem_id;
      break;
    }
  }
  emit(report, out);
  return report.overall == Conclusion::None ? 2 : 0;
}

int cmd_list_families() {
  for (const auto& info : family_catalog()) {
    std::printf("%-11s %s\n", info.cli_name, info.display);
    std::printf("%-11s parameters: %s\n", "", info.parameters);
    std::printf("%-11s constraints: %s\n\n", "", info.constraints);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certifier for uniqueness / strong-uniqueness polynomial criteria over Q(i)"};
  app.require_subcommand(1);

  OutputOptions out;
  std::vector<std::string> theorems;
  bool any_pair = false;

  // check
  auto* check = app.add_subcommand("check", "Analyze a polynomial and run the certification chain");
  std::string poly_text;
  std::string var_text = "z";
  check->add_option("polynomial", poly_text, "Polynomial over Q(i), e.g. \"z^6+4z^5+25/6z^4\"")
      ->required();
  check->add_option("--theorems", theorems, "Subset of certifiers (a,b,c,d,thm2_1,thm2_2,cor2_1,thm2_3)")
      ->delimiter(',');
  check->add_flag("--any-pair", any_pair, "Scan all critical-point pairs in the order-based check");
  check->add_option("--var", var_text, "Variable letter (default z)");
  check->add_flag("--json", out.json, "Emit the JSON report");

  // family
  auto* family = app.add_subcommand("family", "Construct a catalog family and certify it");
  std::string family_name;
  std::string n_text, m_text, r_text, a_text, b_text, c_text;
  std::vector<std::string> raw_params;
  family->add_option("id", family_name, "Family id (see list-families)")->required();
  family->add_option("--n", n_text, "Integer parameter n");
  family->add_option("--m", m_text, "Integer parameter m");
  family->add_option("--r", r_text, "Integer parameter r");
  family->add_option("--a", a_text, "Parameter a (Q(i) scalar)");
  family->add_option("--b", b_text, "Parameter b (Q(i) scalar)");
  family->add_option("--c", c_text, "Parameter c (Q(i) scalar)");
  family->add_option("--param", raw_params, "Extra parameters as key=value")->delimiter(',');
  family->add_option("--theorems", theorems, "Subset of certifiers")->delimiter(',');
  family->add_flag("--any-pair", any_pair, "Scan all critical-point pairs in the order-based check");
  family->add_flag("--json", out.json, "Emit the JSON report");

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Verify a psi-polynomial lemma at concrete (n, A)");
  std::string lemma_id;
  long lemma_n = 0;
  std::string lemma_a;
  lemma->add_option("id", lemma_id, "l3_1, l3_2 or l3_3")->required();
  lemma->add_option("--n", lemma_n, "Integer n")->required();
  lemma->add_option("--A", lemma_a, "Scalar A (Q(i))");
  lemma->add_flag("--json", out.json, "Emit the JSON report");

  // urs
  auto* urs = app.add_subcommand("urs", "Unique-range-set thresholds for given degree and k");
  long urs_n = 0, urs_k = 0;
  std::string urs_l = "3", urs_theta;
  bool urs_entire = false;
  urs->add_option("--n", urs_n, "Degree of the polynomial")->required();
  urs->add_option("--k", urs_k, "Number of distinct critical points")->required();
  urs->add_option("--l", urs_l, "Truncation level: 1, 2, 3, ... or 'inf'");
  urs->add_option("--theta", urs_theta, "Lower bound on min Theta(infinity; .) in [0,1]");
  urs->add_flag("--entire", urs_entire, "Entire-function variant");
  urs->add_flag("--json", out.json, "Emit the JSON report");

  auto* list = app.add_subcommand("list-families", "List the family catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) {
      if (var_text.size() != 1 || var_text[0] == 'i') {
        std::cerr << "--var must be a single letter other than i\n";
        return kExitInputError;
      }
      return cmd_check(poly_text, theorems, any_pair, var_text[0], out);
    }
    if (app.got_subcommand(family)) {
      std::vector<std::pair<std::string, std::string>> params;
      auto add = [&params](const char* key, const std::string& value) {
        if (!value.empty()) params.emplace_back(key, value);
      };
      add("n", n_text);
      add("m", m_text);
      add("r", r_text);
      add("a", a_text);
      add("b", b_text);
      add("c", c_text);
      for (const auto& raw : raw_params) {
        auto eq = raw.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--param expects key=value, got: " + raw);
        params.emplace_back(raw.substr(0, eq), raw.substr(eq + 1));
      }
      return cmd_family(family_name, params, theorems, any_pair, out);
    }
    if (app.got_subcommand(lemma)) return cmd_lemma(lemma_id, lemma_n, lemma_a, out);
    if (app.got_subcommand(urs)) return cmd_urs(urs_n, urs_k, urs_l, urs_theta, urs_entire, out);
    if (app.got_subcommand(list)) return cmd_list_families();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
