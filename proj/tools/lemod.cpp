// Command-line front end: reads scenario files, runs the analysis modules
// and emits deterministic text or JSON reports.
//
// Exit codes: 0 success, 1 infeasible/empty result, 2 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lemod/case_engine.hpp"
#include "lemod/json_io.hpp"
#include "lemod/modp.hpp"
#include "lemod/realization.hpp"
#include "lemod/render.hpp"
#include "lemod/scenario.hpp"
#include "lemod/traces.hpp"

namespace {

using namespace lemod;

constexpr int kOk = 0;
constexpr int kEmpty = 1;
constexpr int kInputError = 2;

struct LambdaOverride {
  Int level = 0;
  Int value = 0;
};

LambdaOverride parse_lambda_override(const std::string& raw) {
  const auto eq = raw.find('=');
  if (eq == std::string::npos)
    throw Error(Errc::parse_error, "--lambda expects J=V, got '" + raw + "'");
  try {
    LambdaOverride ov;
    ov.level = std::stoll(raw.substr(0, eq));
    ov.value = std::stoll(raw.substr(eq + 1));
    return ov;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "--lambda expects J=V, got '" + raw + "'");
  }
}

struct Sweep {
  Int level = 0;
  Int from = 0;
  Int to = 0;
};

Sweep parse_sweep(const std::string& raw) {
  const auto eq = raw.find('=');
  const auto dots = raw.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq)
    throw Error(Errc::parse_error, "--sweep expects J=A..B, got '" + raw + "'");
  try {
    Sweep sw;
    sw.level = std::stoll(raw.substr(0, eq));
    sw.from = std::stoll(raw.substr(eq + 1, dots - eq - 1));
    sw.to = std::stoll(raw.substr(dots + 2));
    if (sw.from > sw.to)
      throw Error(Errc::parse_error, "--sweep range is empty: '" + raw + "'");
    return sw;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "--sweep expects J=A..B, got '" + raw + "'");
  }
}

Scenario apply_overrides(Scenario sc, const std::vector<std::string>& raw) {
  for (const std::string& r : raw) {
    const LambdaOverride ov = parse_lambda_override(r);
    if (ov.level < 0 || ov.level > sc.s)
      throw Error(Errc::parse_error,
                  "--lambda level must be between 0 and s=" + std::to_string(sc.s));
    sc.le_numbers[static_cast<size_t>(ov.level)] = ov.value;
  }
  return validate_scenario(std::move(sc));
}

void print(const std::string& text, bool json, const Json& doc) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_traces(const std::string& file, bool json) {
  const Scenario sc = load_scenario_file(file);
  const TraceVector traces = lm_traces(sc);
  Json doc;
  doc["scenario"] = scenario_to_json(sc);
  doc["traces"] = traces;
  doc["telescoping"] = check_telescoping(traces, sc.n);
  if (sc.has_flag(Flag::sigma_lci))
    doc["lci_signs"] = check_lci_signs(traces, sc.n, sc.s);
  print(render_traces_report(sc, traces), json, doc);
  return kOk;
}

int cmd_bounds(const std::string& file, bool json) {
  const Scenario sc = load_scenario_file(file);
  const TraceVector traces = lm_traces(sc);
  const BoundsReport bounds = lambda_lower_bounds(traces, sc.le_numbers);
  Json doc;
  doc["scenario"] = scenario_to_json(sc);
  doc["traces"] = traces;
  doc["telescoping"] = check_telescoping(traces, sc.n);
  doc["bounds"] = bounds_to_json(bounds);
  print(render_bounds_report(sc, traces, bounds), json, doc);
  return kOk;
}

Json le_to_json(const std::vector<LeNumber>& le) {
  Json arr = Json::array();
  for (const LeNumber& v : le) {
    if (v)
      arr.push_back(*v);
    else
      arr.push_back(nullptr);
  }
  return arr;
}

int cmd_cases(const std::string& file, const std::vector<std::string>& lambdas,
              const std::string& sweep_raw, bool json) {
  Scenario sc = apply_overrides(load_scenario_file(file), lambdas);
  const TraceVector traces = lm_traces(sc);

  Json doc;
  doc["scenario"] = scenario_to_json(sc);
  doc["traces"] = traces;
  doc["telescoping"] = check_telescoping(traces, sc.n);
  Json sections = Json::array();
  std::ostringstream text;

  size_t total = 0;
  if (sweep_raw.empty()) {
    const std::vector<CaseProfile> cases = enumerate_cases(sc);
    total = cases.size();
    text << render_cases_report(sc, traces, cases);
    Json profiles = Json::array();
    for (const CaseProfile& c : cases) profiles.push_back(profile_to_json(c, sc.n));
    sections.push_back(
        Json{{"le_numbers", le_to_json(sc.le_numbers)}, {"profiles", profiles}});
  } else {
    const Sweep sw = parse_sweep(sweep_raw);
    if (sw.level < 0 || sw.level > sc.s)
      throw Error(Errc::parse_error,
                  "--sweep level must be between 0 and s=" + std::to_string(sc.s));
    text << render_scenario_line(sc) << "\n";
    text << "traces: " << render_int_list(traces) << "\n";
    text << "sweep: lambda^" << sw.level << "=" << sw.from << ".." << sw.to
         << "\n";
    for (Int v = sw.from; v <= sw.to; ++v) {
      Scenario step = sc;
      step.le_numbers[static_cast<size_t>(sw.level)] = v;
      step = validate_scenario(std::move(step));
      const std::vector<CaseProfile> cases = enumerate_cases(step);
      total += cases.size();
      text << "section lambda^" << sw.level << "=" << v << ":\n";
      text << render_cases_body(cases, step.n);
      Json profiles = Json::array();
      for (const CaseProfile& c : cases)
        profiles.push_back(profile_to_json(c, step.n));
      sections.push_back(Json{{"le_numbers", le_to_json(step.le_numbers)},
                              {"profiles", profiles}});
    }
  }
  doc["cases"] = sections;
  print(text.str(), json, doc);
  return total == 0 ? kEmpty : kOk;
}

int cmd_charpoly(Int degree, Int trace, bool json) {
  if (degree < 0) throw Error(Errc::parse_error, "--degree must be >= 0");
  const std::vector<CyclotomicMultiset> results =
      enumerate_charpolys(degree, trace);
  Json doc;
  doc["degree"] = degree;
  doc["trace"] = trace;
  Json arr = Json::array();
  std::ostringstream text;
  for (const CyclotomicMultiset& ms : results) {
    const IntPolynomial poly = expand(ms);
    text << ms.str() << " : " << poly.str() << "\n";
    Json entry = multiset_to_json(ms);
    entry["polynomial"] = poly.str();
    arr.push_back(entry);
  }
  if (results.empty()) text << "none\n";
  doc["charpolys"] = arr;
  print(text.str(), json, doc);
  return results.empty() ? kEmpty : kOk;
}

int cmd_realize(const std::string& file, const std::vector<std::string>& lambdas,
                Int case_index, std::optional<Int> lambda0, bool json) {
  Scenario sc = apply_overrides(load_scenario_file(file), lambdas);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);
  if (cases.empty()) {
    if (json)
      std::cout << Json{{"scenario", scenario_to_json(sc)},
                        {"realization", nullptr}}
                       .dump(2)
                << "\n";
    else
      std::cout << render_scenario_line(sc) << "\ncases: 0\n";
    return kEmpty;
  }
  if (case_index < 0 || case_index >= static_cast<Int>(cases.size()))
    throw Error(Errc::parse_error,
                "--case index out of range; there are " +
                    std::to_string(cases.size()) + " cases");
  const CaseProfile& profile = cases[static_cast<size_t>(case_index)];
  const ComplexRealization r = realize(profile, lambda0);
  const VerificationReport report = verify(r, sc, &profile, lambda0);

  std::ostringstream text;
  text << render_scenario_line(sc) << "\n";
  text << "case: " << case_index << "\n";
  text << "lambda0: " << r.ranks[0] << "\n";
  text << render_realization_block(r);
  text << render_verification_block(report);

  Json doc;
  doc["scenario"] = scenario_to_json(sc);
  Json rj = realization_to_json(r);
  rj["case"] = case_index;
  rj["lambda0"] = r.ranks[0];
  rj["profile"] = profile_to_json(profile, sc.n);
  rj["verification"] = verification_to_json(report);
  doc["realization"] = rj;
  print(text.str(), json, doc);
  return report.ok() ? kOk : kEmpty;
}

int cmd_modp(const std::string& file, const std::vector<std::string>& lambdas,
             Int p, bool json) {
  Scenario sc = apply_overrides(load_scenario_file(file), lambdas);
  if (!is_prime(p)) throw Error(Errc::parse_error, "-p must be a prime");
  for (const LeNumber& v : sc.le_numbers)
    if (!v)
      throw Error(Errc::parse_error,
                  "modp requires concrete le_numbers (use --lambda J=V)");
  const TraceVector traces = lm_traces(sc);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);

  std::vector<Int> le;
  for (const LeNumber& v : sc.le_numbers) le.push_back(*v);

  std::ostringstream text;
  text << render_scenario_line(sc) << "\n";
  text << "traces: " << render_int_list(traces) << "\n";
  text << "p: " << p << "\n";
  text << "cases: " << cases.size() << "\n";
  Json case_arr = Json::array();
  for (size_t i = 0; i < cases.size(); ++i) {
    const CaseProfile& profile = cases[i];
    std::map<Int, Int> betti;
    for (const auto& [k, b] : betti_of_case(profile, sc.n))
      betti[k] = b.value(le[0]);
    const std::vector<TorsionInequality> ineqs =
        torsion_bounds(le, betti, p, sc.n);
    text << "case " << i << ":\n";
    text << "  betti:";
    for (const auto& [k, b] : betti) text << " b_" << k << "=" << b;
    text << "\n";
    text << "  torsion bounds (t_k = number of p-power summands of H^k):\n";
    text << render_torsion_inequalities(ineqs);
    Json betti_json = Json::object();
    for (const auto& [k, b] : betti) betti_json[std::to_string(k)] = b;
    case_arr.push_back(Json{{"profile", profile_to_json(profile, sc.n)},
                            {"betti", betti_json},
                            {"inequalities", inequalities_to_json(ineqs)}});
  }

  Json doc;
  doc["scenario"] = scenario_to_json(sc);
  doc["traces"] = traces;
  doc["modp"] = Json{{"p", p}, {"cases", case_arr}};
  print(text.str(), json, doc);
  return cases.empty() ? kEmpty : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lemod: admissible monodromy structures of the Milnor fiber of a "
      "non-isolated hypersurface singularity, from link Euler characteristics "
      "and Le numbers"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> lambdas;
  std::string sweep;
  bool json = false;
  Int degree = 0, trace = 0, case_index = 0, p = 2;
  Int lambda0_value = -1;
  bool have_lambda0 = false;

  auto* traces_cmd =
      app.add_subcommand("traces", "monodromy traces and telescoping check");
  traces_cmd->add_option("file", file, "scenario file")->required();
  traces_cmd->add_flag("--json", json, "JSON output");

  auto* bounds_cmd =
      app.add_subcommand("bounds", "lower bounds on the Le numbers");
  bounds_cmd->add_option("file", file, "scenario file")->required();
  bounds_cmd->add_flag("--json", json, "JSON output");

  auto* cases_cmd =
      app.add_subcommand("cases", "enumerate admissible complex structures");
  cases_cmd->add_option("file", file, "scenario file")->required();
  cases_cmd->add_option("--lambda", lambdas, "override a Le number, J=V");
  cases_cmd->add_option("--sweep", sweep, "sweep one Le number, J=A..B");
  cases_cmd->add_flag("--json", json, "JSON output");

  auto* charpoly_cmd = app.add_subcommand(
      "charpoly", "quasi-unipotent characteristic polynomials by degree/trace");
  charpoly_cmd->add_option("--degree", degree, "total degree")->required();
  charpoly_cmd->add_option("--trace", trace, "root sum")->required();
  charpoly_cmd->add_flag("--json", json, "JSON output");

  auto* realize_cmd =
      app.add_subcommand("realize", "build and verify an integer witness");
  realize_cmd->add_option("file", file, "scenario file")->required();
  realize_cmd->add_option("--case", case_index, "case index (0-based)")
      ->required();
  auto* l0opt =
      realize_cmd->add_option("--lambda0", lambda0_value, "value for lambda^0");
  realize_cmd->add_option("--lambda", lambdas, "override a Le number, J=V");
  realize_cmd->add_flag("--json", json, "JSON output");

  auto* modp_cmd =
      app.add_subcommand("modp", "mod-p dimensions and torsion bounds");
  modp_cmd->add_option("file", file, "scenario file")->required();
  modp_cmd->add_option("-p,--prime", p, "prime")->required();
  modp_cmd->add_option("--lambda", lambdas, "override a Le number, J=V");
  modp_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  have_lambda0 = l0opt->count() > 0;

  try {
    if (app.got_subcommand(traces_cmd)) return cmd_traces(file, json);
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(file, json);
    if (app.got_subcommand(cases_cmd)) return cmd_cases(file, lambdas, sweep, json);
    if (app.got_subcommand(charpoly_cmd)) return cmd_charpoly(degree, trace, json);
    if (app.got_subcommand(realize_cmd))
      return cmd_realize(file, lambdas, case_index,
                         have_lambda0 ? std::optional<Int>(lambda0_value)
                                      : std::nullopt,
                         json);
    if (app.got_subcommand(modp_cmd)) return cmd_modp(file, lambdas, p, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
