#include <iostream>

#include <CLI11.hpp>

#include "recov/cli.hpp"

namespace cli = recov::cli;

int main(int argc, char** argv) {
  CLI::App app{"Schedule repairs of deteriorating nodes: simulate, solve, analyze, experiment"};
  app.require_subcommand(1);

  cli::SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run a policy or non-jumping order and write a trace");
  simulate->add_option("--scenario", sim.scenario, "Scenario JSON file")->required();
  auto* policy_opt = simulate->add_option(
      "--policy", sim.policy,
      "healthiest-first | least-mod-global | least-mod-in-z | random | random-nonjumping");
  simulate->add_option("--order", sim.order, "Comma-separated non-jumping order, e.g. 1,3,2")->excludes(policy_opt);
  simulate->add_option("--horizon", sim.horizon, "Step cap (default from RECOV_MAX_HORIZON or scenario)");
  simulate->add_option("--trace", sim.trace, "Write the trace CSV here");
  simulate->add_option("--seed", sim.seed, "Seed for random policies");

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal sequence");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario JSON file")->required();
  solve_cmd->add_option("--method", solve.method, "auto | brute | nonjump-enum")
      ->check(CLI::IsMember({"auto", "brute", "nonjump-enum"}));
  solve_cmd->add_option("--out", solve.out, "Write the result JSON here (default: stdout)");
  solve_cmd->add_option("--horizon", solve.horizon, "Brute-force depth");
  solve_cmd->add_option("--horizon-cap", solve.horizon_cap, "Largest brute-force depth allowed");
  solve_cmd->add_option("--node-cap", solve.node_cap, "Largest node count for brute force");

  cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report regime, repair bound, target set and conditions");
  analyze_cmd->add_option("--scenario", analyze.scenario, "Scenario JSON file")->required();

  cli::ExperimentOptions exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Histogram of repaired counts under a random baseline");
  exp_cmd->add_option("--scenario", exp.scenario, "Scenario JSON file")->required();
  exp_cmd->add_option("--baseline", exp.baseline, "random | random-nonjumping")
      ->check(CLI::IsMember({"random", "random-nonjumping"}));
  exp_cmd->add_option("--samples", exp.samples, "Number of sampled sequences")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", exp.seed, "Base seed");
  exp_cmd->add_option("--out", exp.out, "Write the histogram CSV here (default: stdout)");
  exp_cmd->add_option("--horizon", exp.horizon, "Step cap per sample");

  cli::ReproduceOptions rep;
  auto* rep_cmd = app.add_subcommand("reproduce", "Rerun the built-in cases and check the published numbers");
  rep_cmd->add_option("--case", rep.which, "1 | 2 | tables")->required()->check(CLI::IsMember({"1", "2", "tables"}));
  rep_cmd->add_option("--out-dir", rep.out_dir, "Write scenarios, traces and histograms here");
  rep_cmd->add_option("--seed", rep.seed, "Base seed for the random baselines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  if (simulate->parsed()) return cli::cmd_simulate(sim, std::cout, std::cerr);
  if (solve_cmd->parsed()) return cli::cmd_solve(solve, std::cout, std::cerr);
  if (analyze_cmd->parsed()) return cli::cmd_analyze(analyze, std::cout, std::cerr);
  if (exp_cmd->parsed()) return cli::cmd_experiment(exp, std::cout, std::cerr);
  return cli::cmd_reproduce(rep, std::cout, std::cerr);
}
