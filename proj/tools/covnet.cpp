// covnet: network design with coverage costs.
//
// Subcommands: gen, solve, spanner, oracle, verify, batch. All structured
// artifacts are JSON; batch summaries are CSV. Exit codes: 0 success,
// 2 invariant violation, 3 parse/shape error, 4 oracle-limit refusal.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covnet/generator.hpp"
#include "covnet/io.hpp"
#include "covnet/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 2;
constexpr int kExitParse = 3;
constexpr int kExitOracleLimit = 4;

covnet::OracleLimits effective_limits(const std::string& cli_value) {
  if (!cli_value.empty()) return covnet::OracleLimits::parse(cli_value);
  if (const char* env = std::getenv("COVNET_ORACLE_LIMITS"))
    return covnet::OracleLimits::parse(env);
  return {};
}

void emit(const std::string& output, const covnet::Json& j) {
  if (output.empty())
    std::cout << covnet::json_to_text(j);
  else
    covnet::write_json_file(output, j);
}

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

int print_report(const std::vector<CheckLine>& lines) {
  bool ok = true;
  for (const auto& line : lines) {
    std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
    if (!line.detail.empty()) std::cout << ": " << line.detail;
    std::cout << "\n";
    ok = ok && line.pass;
  }
  return ok ? kExitOk : kExitInvariant;
}

std::vector<CheckLine> verify_solution(const covnet::Instance& instance,
                                       const covnet::Json& j) {
  std::vector<CheckLine> lines;
  try {
    covnet::RoutingSolution sol = covnet::solution_from_json(instance, j);
    covnet::validate_solution(instance, sol);
    lines.push_back({"solution_feasible", true, ""});
    covnet::Rational cost = covnet::load_cost(instance, sol);
    if (j.contains("cost")) {
      covnet::Rational claimed =
          covnet::parse_rational(j.at("cost").get<std::string>());
      lines.push_back({"cost_matches", claimed == cost,
                       "recomputed " + covnet::rational_to_string(cost) +
                           ", file says " + covnet::rational_to_string(claimed)});
    }
  } catch (const covnet::SolutionError& e) {
    lines.push_back({"solution_feasible", false, e.what()});
  }
  return lines;
}

std::vector<CheckLine> verify_certificate(const covnet::Instance& instance,
                                          const covnet::Json& j) {
  std::vector<CheckLine> lines;
  covnet::LaminarCertificate cert = covnet::certificate_from_json(instance, j);
  covnet::LaminarFamily family = covnet::build_family(instance);
  bool demands_match = cert.demand_sets == family.sets;
  lines.push_back({"demand_sets_match", demands_match,
                   "certificate demand sets must be the instance family in "
                   "processing order"});
  if (!demands_match) return lines;

  auto dual_violations = covnet::check_dual_feasibility(instance, cert.duals);
  lines.push_back({"dual_feasible", dual_violations.empty(),
                   dual_violations.empty() ? "" : dual_violations.front()});
  bool primal = covnet::check_primal_feasibility(instance, cert.demand_sets,
                                                 cert.forests);
  lines.push_back({"primal_feasible", primal, ""});
  auto forest_violations = covnet::check_forest_invariant(instance, cert);
  lines.push_back({"forest_invariant", forest_violations.empty(),
                   forest_violations.empty() ? "" : forest_violations.front()});

  if (primal) {
    covnet::Rational primal_cost =
        covnet::laminar_cost(instance, cert.demand_sets, cert.forests);
    lines.push_back({"primal_value", primal_cost == cert.primal,
                     "recomputed " + covnet::rational_to_string(primal_cost)});
    covnet::Rational dual_sum = 0;
    for (const auto& y : cert.duals) dual_sum += y.value;
    lines.push_back({"dual_value", dual_sum == cert.dual_value,
                     "recomputed " + covnet::rational_to_string(dual_sum)});
    lines.push_back({"ratio_bound", cert.primal <= 2 * cert.dual_value,
                     covnet::rational_to_string(cert.primal) + " <= 2 * " +
                         covnet::rational_to_string(cert.dual_value)});
  }
  return lines;
}

std::vector<CheckLine> verify_spanner(const covnet::Instance& instance,
                                      const covnet::Json& j, int oracle_limit) {
  std::vector<CheckLine> lines;
  std::vector<std::vector<int>> groups;
  for (const auto& g : instance.groups()) groups.push_back(g.terminals);
  covnet::SpannerResult rebuilt =
      covnet::build_group_spanner(instance.graph(), groups);
  covnet::Json expected = covnet::spanner_to_json(instance.graph(), rebuilt);
  bool same = expected.at("H") == j.at("H") && expected.at("A1") == j.at("A1") &&
              expected.at("A2") == j.at("A2") && expected.at("L") == j.at("L");
  lines.push_back({"spanner_reproducible", same,
                   "deterministic rebuild matches the file"});
  covnet::SpannerReport report =
      covnet::certify_spanner(rebuilt, instance.graph(), groups, oracle_limit);
  for (const auto& c : report.checks)
    lines.push_back({(c.heuristic ? "heuristic:" : "") + c.name, c.pass,
                     c.detail});
  return lines;
}

struct BatchRow {
  std::string id;
  std::string cost = "-";
  std::string bound = "-";
  std::string ratio = "-";
  std::string status = "FAILED";
};

BatchRow run_batch_row(const covnet::GeneratorSpec& spec, const std::string& algo,
                       bool use_oracle, const covnet::OracleLimits& limits) {
  BatchRow row;
  row.id = covnet::kind_to_string(spec.kind) + "-" + std::to_string(spec.seed);
  covnet::Instance instance = covnet::generate_instance(spec);

  if (algo == "laminar") {
    covnet::LaminarResult result = covnet::solve_laminar(instance);
    const auto& cert = result.certificate;
    row.cost = covnet::rational_to_string(cert.primal);
    row.bound = covnet::rational_to_string(cert.dual_value);
    row.ratio = cert.dual_value > 0
                    ? covnet::rational_to_string(cert.primal / cert.dual_value)
                    : "0";
    bool ok = cert.primal <= 2 * cert.dual_value &&
              covnet::check_dual_feasibility(instance, cert.duals).empty() &&
              covnet::check_primal_feasibility(instance, cert.demand_sets,
                                               cert.forests) &&
              covnet::check_forest_invariant(instance, cert).empty();
    if (ok && use_oracle) {
      try {
        auto [opt_sol, opt] = covnet::exact_coverage_optimum(instance, limits);
        ok = cert.primal <= 2 * opt;
      } catch (const covnet::OracleRefused&) {
        // out of limits; certificate checks alone decide
      }
    }
    row.status = ok ? "OK" : "FAILED";
  } else if (algo == "sunflower") {
    covnet::BoundMode mode =
        use_oracle ? covnet::BoundMode::kOracle : covnet::BoundMode::kRelaxed;
    covnet::SunflowerSolution sol;
    try {
      sol = covnet::solve_sunflower(instance, mode, limits);
    } catch (const covnet::OracleRefused&) {
      sol = covnet::solve_sunflower(instance, covnet::BoundMode::kRelaxed, limits);
    }
    row.cost = covnet::rational_to_string(sol.cost);
    row.bound = covnet::rational_to_string(sol.lower_bound);
    row.ratio = sol.lower_bound > 0
                    ? covnet::rational_to_string(sol.cost / sol.lower_bound)
                    : "0";
    std::vector<std::vector<int>> groups;
    for (const auto& g : instance.groups()) groups.push_back(g.terminals);
    bool ok = sol.cost >= sol.lower_bound &&
              covnet::certify_spanner(sol.spanner, instance.graph(), groups)
                  .all_exact_pass();
    if (ok && sol.bound_mode == covnet::BoundMode::kOracle)
      ok = sol.cost <= sol.ratio_bound() * sol.lower_bound;
    row.status = ok ? "OK" : "FAILED";
  } else if (algo == "spanner") {
    std::vector<std::vector<int>> groups;
    for (const auto& g : instance.groups()) groups.push_back(g.terminals);
    covnet::SpannerResult result =
        covnet::build_group_spanner(instance.graph(), groups);
    row.cost = std::to_string(result.a1.size() + result.a2.size());
    std::size_t budget = 6 * result.mst_edges.size() + 6;
    row.bound = std::to_string(budget);
    row.ratio = std::to_string(result.L);
    row.status = covnet::certify_spanner(result, instance.graph(), groups)
                         .all_exact_pass()
                     ? "OK"
                     : "FAILED";
  } else {
    throw covnet::ParseError("unknown algo in batch spec: '" + algo + "'");
  }
  return row;
}

int run_batch(const std::string& input, const std::string& output,
              const covnet::OracleLimits& limits) {
  covnet::Json spec_json = covnet::load_json(input);
  std::vector<covnet::Json> run_groups;
  if (spec_json.contains("runs"))
    for (const auto& r : spec_json.at("runs")) run_groups.push_back(r);
  else if (!spec_json.empty())
    run_groups.push_back(spec_json);

  std::ostringstream csv;
  csv << "id,cost,bound,ratio,cert\n";
  bool any_failed = false;
  for (const auto& run : run_groups) {
    covnet::GeneratorSpec spec;
    spec.kind = covnet::parse_kind(run.value("kind", "laminar"));
    spec.n = run.value("n", spec.n);
    spec.m = run.value("m", spec.m);
    spec.g = run.value("g", spec.g);
    spec.depth = run.value("depth", spec.depth);
    std::uint64_t base_seed = run.value("seed", 0ull);
    int count = run.value("count", 1);
    std::string algo = run.value("algo", covnet::kind_to_string(spec.kind) ==
                                                 "laminar"
                                             ? "laminar"
                                             : "sunflower");
    bool use_oracle = run.value("oracle", true);
    for (int i = 0; i < count; ++i) {
      spec.seed = base_seed + static_cast<std::uint64_t>(i);
      BatchRow row;
      try {
        row = run_batch_row(spec, algo, use_oracle, limits);
      } catch (const std::exception& e) {
        row.id = covnet::kind_to_string(spec.kind) + "-" +
                 std::to_string(spec.seed);
        row.status = std::string("FAILED(") + e.what() + ")";
      }
      if (row.status != "OK") any_failed = true;
      csv << row.id << "," << row.cost << "," << row.bound << "," << row.ratio
          << "," << row.status << "\n";
    }
  }
  if (output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(output);
    out << csv.str();
  }
  return any_failed ? kExitInvariant : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network design with coverage costs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  std::string gen_kind = "laminar", gen_output;
  covnet::GeneratorSpec spec;
  gen->add_option("--kind", gen_kind, "laminar | sunflower | uniform-pairs");
  gen->add_option("--n", spec.n, "vertices");
  gen->add_option("--m", spec.m, "edges");
  gen->add_option("--g", spec.g, "groups");
  gen->add_option("--depth", spec.depth, "laminar nesting depth");
  gen->add_option("--seed", spec.seed, "64-bit seed");
  gen->add_option("--max-cost", spec.max_cost, "max integer edge cost (laminar)");
  gen->add_option("--output,-o", gen_output, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver");
  std::string algo, solve_input, solve_output, solve_cert, bound = "relaxed",
              solve_limits;
  solve->add_option("--algo", algo, "laminar | sunflower")->required();
  solve->add_option("--input,-i", solve_input)->required();
  solve->add_option("--output,-o", solve_output);
  solve->add_option("--certificate", solve_cert, "laminar certificate file");
  solve->add_option("--bound", bound, "sunflower bound mode: oracle | relaxed");
  solve->add_option("--limits", solve_limits, "oracle limits, e.g. e=14,g=3,k=10");

  // spanner
  auto* spanner = app.add_subcommand("spanner", "build a group spanner");
  std::string sp_input, sp_output;
  bool sp_certify = false;
  int sp_oracle_limit = 6;
  spanner->add_option("--input,-i", sp_input)->required();
  spanner->add_option("--output,-o", sp_output);
  spanner->add_flag("--certify", sp_certify, "attach certification report");
  spanner->add_option("--oracle-limit", sp_oracle_limit,
                      "max terminals for exact stretch checks");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact optimum at desk scale");
  std::string or_input, or_output, or_limits;
  oracle->add_option("--input,-i", or_input)->required();
  oracle->add_option("--output,-o", or_output);
  oracle->add_option("--limits", or_limits, "e=14,g=3,k=10");

  // verify
  auto* verify = app.add_subcommand("verify", "check a solution or certificate");
  std::string v_input, v_solution, v_certificate, v_spanner;
  int v_oracle_limit = 6;
  verify->add_option("--input,-i", v_input)->required();
  verify->add_option("--solution", v_solution);
  verify->add_option("--certificate", v_certificate);
  verify->add_option("--spanner", v_spanner);
  verify->add_option("--oracle-limit", v_oracle_limit);

  // batch
  auto* batch = app.add_subcommand("batch", "run a seeded verification batch");
  std::string b_input, b_output, b_limits;
  batch->add_option("--input,-i", b_input)->required();
  batch->add_option("--output,-o", b_output, "CSV output (default stdout)");
  batch->add_option("--limits", b_limits, "oracle limits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      spec.kind = covnet::parse_kind(gen_kind);
      covnet::Instance instance = covnet::generate_instance(spec);
      emit(gen_output, covnet::instance_to_json(instance));
      return kExitOk;
    }

    if (solve->parsed()) {
      covnet::Instance instance = covnet::load_instance(solve_input);
      if (algo == "laminar") {
        covnet::LaminarResult result = covnet::solve_laminar(instance);
        emit(solve_output, covnet::solution_to_json(instance, result.solution));
        if (!solve_cert.empty())
          covnet::write_json_file(
              solve_cert, covnet::certificate_to_json(instance, result.certificate));
        return kExitOk;
      }
      if (algo == "sunflower") {
        covnet::BoundMode mode = bound == "oracle" ? covnet::BoundMode::kOracle
                                                   : covnet::BoundMode::kRelaxed;
        covnet::SunflowerSolution sol = covnet::solve_sunflower(
            instance, mode, effective_limits(solve_limits));
        emit(solve_output, covnet::sunflower_to_json(instance, sol));
        return kExitOk;
      }
      throw covnet::ParseError("unknown --algo '" + algo + "'");
    }

    if (spanner->parsed()) {
      covnet::Instance instance = covnet::load_instance(sp_input);
      std::vector<std::vector<int>> groups;
      for (const auto& g : instance.groups()) groups.push_back(g.terminals);
      covnet::SpannerResult result =
          covnet::build_group_spanner(instance.graph(), groups);
      if (sp_certify) {
        covnet::SpannerReport report = covnet::certify_spanner(
            result, instance.graph(), groups, sp_oracle_limit);
        emit(sp_output, covnet::spanner_to_json(instance.graph(), result, &report));
        return report.all_exact_pass() ? kExitOk : kExitInvariant;
      }
      emit(sp_output, covnet::spanner_to_json(instance.graph(), result));
      return kExitOk;
    }

    if (oracle->parsed()) {
      covnet::Instance instance = covnet::load_instance(or_input);
      auto [sol, optimum] =
          covnet::exact_coverage_optimum(instance, effective_limits(or_limits));
      covnet::Json out{{"optimum", covnet::rational_to_string(optimum)},
                       {"solution", covnet::solution_to_json(instance, sol)}};
      emit(or_output, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      covnet::Instance instance = covnet::load_instance(v_input);
      std::vector<CheckLine> lines;
      if (!v_solution.empty()) {
        auto l = verify_solution(instance, covnet::load_json(v_solution));
        lines.insert(lines.end(), l.begin(), l.end());
      }
      if (!v_certificate.empty()) {
        auto l = verify_certificate(instance, covnet::load_json(v_certificate));
        lines.insert(lines.end(), l.begin(), l.end());
      }
      if (!v_spanner.empty()) {
        auto l = verify_spanner(instance, covnet::load_json(v_spanner),
                                v_oracle_limit);
        lines.insert(lines.end(), l.begin(), l.end());
      }
      if (lines.empty())
        throw covnet::ParseError(
            "verify needs --solution, --certificate, or --spanner");
      return print_report(lines);
    }

    if (batch->parsed())
      return run_batch(b_input, b_output, effective_limits(b_limits));
  } catch (const covnet::OracleRefused& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleLimit;
  } catch (const covnet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const covnet::ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
