#include "recov/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "recov/analysis.hpp"
#include "recov/experiment.hpp"
#include "recov/io.hpp"
#include "recov/policies.hpp"
#include "recov/scenarios.hpp"
#include "recov/solvers.hpp"

namespace recov::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SolverLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSolverLimit;
  } catch (const std::invalid_argument& e) {  // InputError, PreconditionError
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: arithmetic overflow: " << e.what() << '\n';
    return kInputError;
  }
}

std::string join_ids(const std::vector<NodeId>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << ids[i];
  return os.str();
}

std::string set_text(const std::vector<NodeId>& ids) { return "{" + join_ids(ids) + "}"; }

void print_reward(std::ostream& out, const RewardReport& r) {
  out << "repaired: " << set_text(r.repaired_set) << '\n';
  out << "reward: " << r.reward << '\n';
}

}  // namespace

std::int64_t resolve_horizon(std::optional<std::int64_t> explicit_horizon, std::int64_t fallback) {
  if (explicit_horizon) {
    if (*explicit_horizon < 0) throw InputError("horizon must be nonnegative");
    return *explicit_horizon;
  }
  if (const char* env = std::getenv("RECOV_MAX_HORIZON")) {
    std::string text(env);
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size() || v < 0)
      throw InputError("RECOV_MAX_HORIZON must be a nonnegative integer");
    return v;
  }
  return fallback;
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.policy.has_value() == opts.order.has_value())
      throw InputError("give exactly one of --policy or --order");
    Scenario scenario = io::load_scenario(opts.scenario);
    PolicyKind kind = opts.policy ? parse_policy(*opts.policy, scenario, opts.seed)
                                  : parse_policy("order:" + *opts.order, scenario, opts.seed);
    const std::int64_t horizon = resolve_horizon(opts.horizon, default_horizon(scenario));
    Trace trace = simulate_policy(scenario, kind, horizon);
    if (opts.trace) io::write_file(*opts.trace, io::trace_csv(trace));
    out << "policy: " << policy_name(kind) << '\n';
    out << "steps: " << trace.steps() << '\n';
    print_reward(out, reward(scenario, trace));
    if (trace.truncated && trace.final_state().any_active()) {
      err << "warning: horizon " << horizon << " reached with active nodes remaining\n";
      return static_cast<int>(kTruncated);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Scenario scenario = io::load_scenario(opts.scenario);
    BruteForceLimits limits;
    limits.horizon_cap = opts.horizon_cap;
    limits.node_cap = opts.node_cap;
    SolveResult result;
    if (opts.method == "auto") {
      result = solve_auto(scenario, limits);
    } else if (opts.method == "brute") {
      result = brute_force_optimal(scenario, opts.horizon, limits);
    } else if (opts.method == "nonjump-enum") {
      result = enumerate_nonjumping_optimal(scenario);
    } else {
      throw InputError("unknown method '" + opts.method + "'");
    }
    const std::string json = io::solve_result_json(result);
    if (opts.out)
      io::write_file(*opts.out, json);
    else
      out << json;
    out << "method: " << method_name(result.method) << '\n';
    print_reward(out, RewardReport{result.repaired_set, result.reward});
    out << "exhaustive: " << (result.exhaustive ? "true" : "false") << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Scenario scenario = io::load_scenario(opts.scenario);
    RegimeReport regime = classify_regime(scenario);
    out << "regime: " << regime_name(regime) << '\n';

    const bool bounded = std::all_of(scenario.nodes().begin(), scenario.nodes().end(), [](const NodeSpec& n) {
      return n.inc.value() > Rational(0) && n.dec.value() >= n.inc.value();
    });
    if (bounded) {
      BoundReport b = max_repair_bound(scenario);
      out << "n: " << b.n << '\n' << "L: " << b.L << '\n';
    }

    const std::int64_t x = survival_count(scenario);
    const std::vector<NodeId> z = build_target_set(scenario, x);
    out << "x: " << x << '\n' << "Z: (" << join_ids(z) << ")\n";

    auto verdict = [&](const char* name, bool holds, const std::string& violation) {
      out << name << ": " << (holds ? "holds" : "fails");
      if (!holds) out << " (" << violation << ")";
      out << '\n';
    };
    Theorem3Check t3 = theorem3_conditions(scenario);
    verdict("theorem3", t3.holds, t3.violation);
    ConditionCheck t5 = theorem5_conditions(scenario, z);
    verdict("theorem5", t5.holds, t5.violation);
    ConditionCheck p1 = prop1_conditions(scenario);
    verdict("prop1", p1.holds, p1.violation);
    return static_cast<int>(kOk);
  });
}

int cmd_experiment(const ExperimentOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Scenario scenario = io::load_scenario(opts.scenario);
    Baseline baseline = parse_baseline(opts.baseline);
    const std::int64_t horizon = resolve_horizon(opts.horizon, default_horizon(scenario));
    Histogram h = run_baseline_experiment(scenario, baseline, opts.samples, opts.seed, horizon);
    const std::string csv = io::histogram_csv(h);
    if (opts.out)
      io::write_file(*opts.out, csv);
    else
      out << csv;
    out << "samples: " << h.samples << '\n';
    out << "mean: " << std::fixed << std::setprecision(3) << h.mean() << '\n';
    out << "mode: " << h.mode() << '\n';
    if (h.truncated > 0) err << "warning: " << h.truncated << " samples hit the horizon guard\n";
    return static_cast<int>(kOk);
  });
}

namespace {

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::vector<Rational> row(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

std::string row_text(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

void emit(const std::optional<std::filesystem::path>& dir, const std::string& name, const std::string& content) {
  if (!dir) return;
  std::filesystem::create_directories(*dir);
  io::write_file(*dir / name, content);
}

bool rows_match(const Trace& trace, std::int64_t t, const std::vector<Rational>& expected, std::string& seen) {
  for (const auto& r : trace.rows) {
    if (r.t != t) continue;
    seen = row_text(r.healths);
    return r.healths == expected;
  }
  seen = "missing";
  return false;
}

void reproduce_case1(const ReproduceOptions& opts, std::ostream& out, Checklist& checks) {
  Scenario sc = scenarios::case1();
  emit(opts.out_dir, "case1.json", io::serialize_scenario(sc));
  Trace opt = simulate_policy(sc, policy::HealthiestFirst{}, default_horizon(sc));
  emit(opts.out_dir, "case1_healthiest_first.csv", io::trace_csv(opt));
  const auto count = reward(sc, opt).repaired_set.size();
  checks.check("case1 healthiest-first count", count == 7, std::to_string(count) + " repaired (expected 7)");
  BoundReport b = max_repair_bound(sc);
  checks.check("case1 bound", b.L == 7 && b.n == 1,
               "n = " + std::to_string(b.n) + ", L = " + std::to_string(b.L) + " (expected n = 1, L = 7)");

  Histogram random = run_baseline_experiment(sc, Baseline::Random, 1000, opts.seed, default_horizon(sc));
  emit(opts.out_dir, "case1_random.csv", io::histogram_csv(random));
  checks.check("case1 random mode", random.mode() == 2,
               "mode " + std::to_string(random.mode()) + " (expected 2)");
  Histogram nonjump =
      run_baseline_experiment(sc, Baseline::RandomNonJumping, 1000, opts.seed, default_horizon(sc));
  emit(opts.out_dir, "case1_random_nonjumping.csv", io::histogram_csv(nonjump));
  checks.check("case1 random non-jumping", nonjump.counts.size() == 1 && nonjump.counts.count(7),
               "single bar at 7 expected, mode " + std::to_string(nonjump.mode()));
  out << "case1 random mean: " << std::fixed << std::setprecision(3) << random.mean() << '\n';
}

void reproduce_case2(const ReproduceOptions& opts, std::ostream& out, Checklist& checks) {
  Scenario sc = scenarios::case2();
  emit(opts.out_dir, "case2.json", io::serialize_scenario(sc));
  Trace opt = simulate_policy(sc, policy::LeastModifiedHealthGlobal{}, default_horizon(sc));
  emit(opts.out_dir, "case2_least_mod_global.csv", io::trace_csv(opt));
  const auto count = reward(sc, opt).repaired_set.size();
  checks.check("case2 least-mod-global count", count == 15, std::to_string(count) + " repaired (expected 15)");
  Histogram random = run_baseline_experiment(sc, Baseline::Random, 1000, opts.seed, default_horizon(sc));
  emit(opts.out_dir, "case2_random.csv", io::histogram_csv(random));
  std::ostringstream mean;
  mean << std::fixed << std::setprecision(3) << random.mean();
  checks.check("case2 random mean", random.mean() >= 10.0 && random.mean() <= 12.0,
               mean.str() + " (expected 11 +/- 1)");
  out << "case2 random mode: " << random.mode() << '\n';
}

void reproduce_tables(const ReproduceOptions& opts, std::ostream&, Checklist& checks) {
  std::string seen;

  Scenario ex4 = scenarios::example4();
  emit(opts.out_dir, "example4.json", io::serialize_scenario(ex4));
  Trace t1 = simulate_policy(ex4, policy::LeastModifiedHealthInSet{build_target_set(ex4, survival_count(ex4))},
                             default_horizon(ex4));
  emit(opts.out_dir, "example4_least_mod_in_z.csv", io::trace_csv(t1));
  const std::vector<std::vector<Rational>> in_z_rows = {row({"0.3", "0.5", "0.2"}), row({"1", "0.2", "0"}),
                                                     row({"1", "1", "0"})};
  for (std::size_t t = 0; t < in_z_rows.size(); ++t) {
    bool ok = rows_match(t1, static_cast<std::int64_t>(t), in_z_rows[t], seen);
    checks.check("example4 least-mod-in-z t=" + std::to_string(t), ok, seen);
  }
  Rational r1 = reward(ex4, t1).reward;
  checks.check("example4 least-mod-in-z reward", r1 == Rational(4), r1.to_string() + " (expected 4)");

  Scenario ex5 = scenarios::example5();
  emit(opts.out_dir, "example5.json", io::serialize_scenario(ex5));
  std::vector<NodeId> left{1, 2, 3};
  Trace t2a = simulate_sequence(ex5, expand_order(ex5, left), default_horizon(ex5));
  emit(opts.out_dir, "example5_order_123.csv", io::trace_csv(t2a));
  const std::vector<std::pair<std::int64_t, std::vector<Rational>>> order123_rows = {
      {0, row({"0.8", "0.52", "0.73"})},
      {8, row({"1", "0.36", "0.57"})},
      {34, row({"1", "1", "0.05"})},
      {72, row({"1", "1", "1"})}};
  for (const auto& [t, expected] : order123_rows)
    checks.check("example5 order 1,2,3 t=" + std::to_string(t), rows_match(t2a, t, expected, seen), seen);

  std::vector<NodeId> right{1, 3, 2};
  Trace t2b = simulate_sequence(ex5, expand_order(ex5, right), default_horizon(ex5));
  emit(opts.out_dir, "example5_order_132.csv", io::trace_csv(t2b));
  const std::vector<std::pair<std::int64_t, std::vector<Rational>>> order132_rows = {
      {0, row({"0.8", "0.52", "0.73"})}, {8, row({"1", "0.36", "0.57"})}, {26, row({"1", "0", "1"})}};
  for (const auto& [t, expected] : order132_rows)
    checks.check("example5 order 1,3,2 t=" + std::to_string(t), rows_match(t2b, t, expected, seen), seen);

  Trace t3 = simulate_policy(ex5, policy::LeastModifiedHealthGlobal{}, 400);
  emit(opts.out_dir, "example5_least_mod_global.csv", io::trace_csv(t3));
  const std::vector<std::vector<Rational>> global_rows = {row({"0.8", "0.52", "0.73"}), row({"0.78", "0.545", "0.71"}),
                                                     row({"0.76", "0.57", "0.69"}), row({"0.74", "0.595", "0.67"})};
  for (std::size_t t = 0; t < global_rows.size(); ++t)
    checks.check("example5 least-mod-global t=" + std::to_string(t), rows_match(t3, static_cast<std::int64_t>(t), global_rows[t], seen),
                 seen);
  const auto& fail2 = t3.fail_time[1];
  checks.check("example5 least-mod-global node 2 fails by t=134", fail2 && *fail2 <= 134,
               fail2 ? "failed at t=" + std::to_string(*fail2) : "never failed");
  const auto repaired = reward(ex5, t3).repaired_set.size();
  checks.check("example5 least-mod-global misses a node", repaired < 3, std::to_string(repaired) + " of 3 repaired");
}

}  // namespace

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Checklist checks(out);
    if (opts.which == "1")
      reproduce_case1(opts, out, checks);
    else if (opts.which == "2")
      reproduce_case2(opts, out, checks);
    else if (opts.which == "tables")
      reproduce_tables(opts, out, checks);
    else
      throw InputError("unknown case '" + opts.which + "' (expected 1, 2 or tables)");
    return static_cast<int>(checks.all_ok() ? kOk : kFailure);
  });
}

}  // namespace recov::cli
