#include "recov/solvers.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "recov/policies.hpp"

namespace recov {

std::string_view method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::BruteForce: return "brute";
    case SolveMethod::NonJumpEnum: return "nonjump-enum";
    case SolveMethod::Theorem3Policy: return "theorem3";
    case SolveMethod::Theorem5Policy: return "theorem5";
    case SolveMethod::Prop1Policy: return "prop1";
  }
  return "?";
}

namespace {

SolveResult finish(const Scenario& scenario, ControlSequence sequence, SolveMethod method,
                   bool exhaustive) {
  Trace trace = simulate_sequence(scenario, sequence, static_cast<std::int64_t>(sequence.size()));
  RewardReport r = reward(scenario, trace);
  return SolveResult{r.reward, std::move(sequence), std::move(r.repaired_set), method, exhaustive};
}

struct HealthHash {
  std::size_t operator()(const std::vector<Rational>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& r : v) h = h * 1000003u ^ std::hash<Rational>{}(r);
    return h;
  }
};

}  // namespace

std::int64_t default_brute_horizon(const Scenario& scenario) {
  std::int64_t repairs = 0;
  std::int64_t survive = 0;
  for (const auto& n : scenario.nodes()) {
    if (n.inc.value() > Rational(0)) repairs += ceil_div(Rational(1), n.inc.value());
    if (n.dec.value() > Rational(0)) survive = std::max(survive, ceil_div(n.v0.value(), n.dec.value()));
  }
  return repairs + survive;
}

SolveResult brute_force_optimal(const Scenario& scenario, std::optional<std::int64_t> horizon,
                                const BruteForceLimits& limits) {
  if (scenario.size() > limits.node_cap)
    throw SolverLimitError("brute force limited to " + std::to_string(limits.node_cap) + " nodes, got " +
                           std::to_string(scenario.size()));
  const std::int64_t depth_cap = horizon.value_or(default_brute_horizon(scenario));
  if (depth_cap < 0) throw InputError("horizon must be nonnegative");
  if (depth_cap > limits.horizon_cap)
    throw SolverLimitError("brute force horizon " + std::to_string(depth_cap) + " exceeds cap " +
                           std::to_string(limits.horizon_cap));

  struct Entry {
    SystemState state;
    std::int64_t parent;  // -1 for the root
    NodeId action;
  };
  auto value_of = [&](const SystemState& s) {
    Rational total;
    for (std::size_t j = 0; j < s.statuses.size(); ++j)
      if (s.statuses[j] == NodeStatus::Repaired) total += scenario.nodes()[j].w.value();
    return total;
  };

  std::vector<Entry> entries;
  std::unordered_map<std::vector<Rational>, std::size_t, HealthHash> seen;
  entries.push_back(Entry{SystemState::initial(scenario), -1, 0});
  seen.emplace(entries[0].state.healths, 0);

  std::size_t best = 0;
  Rational best_value = value_of(entries[0].state);
  bool exhaustive = true;

  std::vector<NodeId> all;
  for (const auto& n : scenario.nodes()) all.push_back(n.id);

  std::size_t frontier_begin = 0;
  for (std::int64_t depth = 0; frontier_begin < entries.size(); ++depth) {
    const std::size_t frontier_end = entries.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      if (!entries[i].state.any_active()) continue;
      if (depth == depth_cap) {
        exhaustive = false;
        continue;
      }
      for (NodeId id : all) {
        if (limits.prune_absorbed && !entries[i].state.active(id)) continue;
        SystemState next = step(entries[i].state, scenario, Action{id});
        if (seen.count(next.healths)) continue;
        seen.emplace(next.healths, entries.size());
        Rational v = value_of(next);
        entries.push_back(Entry{std::move(next), static_cast<std::int64_t>(i), id});
        if (v > best_value) {
          best_value = v;
          best = entries.size() - 1;
        }
      }
    }
    frontier_begin = frontier_end;
  }

  ControlSequence sequence;
  for (auto at = static_cast<std::int64_t>(best); entries[static_cast<std::size_t>(at)].parent >= 0;
       at = entries[static_cast<std::size_t>(at)].parent)
    sequence.push_back(Action{entries[static_cast<std::size_t>(at)].action});
  std::reverse(sequence.begin(), sequence.end());

  SolveResult result = finish(scenario, std::move(sequence), SolveMethod::BruteForce, exhaustive);
  if (result.reward != best_value) throw std::logic_error("brute force witness does not reproduce its reward");
  return result;
}

namespace {

class OrderSearch {
 public:
  OrderSearch(const Scenario& scenario, std::int64_t limit)
      : sc_(scenario), limit_(static_cast<std::size_t>(limit)), used_(scenario.size(), false) {}

  // Best order found so far and its weight.
  std::vector<NodeId> best_order;
  Rational best_value;

  void run_from(NodeId first) {
    order_.clear();
    std::fill(used_.begin(), used_.end(), false);
    extend(first, 0, Rational(0));
  }

  void run_all() {
    order_.clear();
    std::fill(used_.begin(), used_.end(), false);
    search(0, Rational(0));
  }

 private:
  // Upper bound on the weight still obtainable with `slots` more nodes.
  Rational optimistic(std::size_t slots) const {
    std::vector<Rational> w;
    for (const auto& n : sc_.nodes())
      if (!used_[static_cast<std::size_t>(n.id - 1)]) w.push_back(n.w.value());
    slots = std::min(slots, w.size());
    std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(slots), w.end(),
                      std::greater<>());
    Rational total;
    for (std::size_t i = 0; i < slots; ++i) total += w[i];
    return total;
  }

  void extend(NodeId id, std::int64_t elapsed, const Rational& value) {
    Rational a = sc_.v0(id) - sc_.dec(id) * Rational(elapsed);
    if (a <= Rational(0)) return;
    std::int64_t t = repair_time(a, sc_.inc(id));
    used_[static_cast<std::size_t>(id - 1)] = true;
    order_.push_back(id);
    Rational v = value + sc_.weight(id);
    if (v > best_value) {
      best_value = v;
      best_order = order_;
    }
    search(elapsed + t, v);
    order_.pop_back();
    used_[static_cast<std::size_t>(id - 1)] = false;
  }

  void search(std::int64_t elapsed, const Rational& value) {
    if (order_.size() >= limit_) return;
    if (value + optimistic(limit_ - order_.size()) <= best_value) return;
    for (const auto& n : sc_.nodes()) {
      if (used_[static_cast<std::size_t>(n.id - 1)]) continue;
      extend(n.id, elapsed, value);
    }
  }

  const Scenario& sc_;
  std::size_t limit_;
  std::vector<bool> used_;
  std::vector<NodeId> order_;
};

void require_dec_ge_inc_positive(const Scenario& scenario) {
  for (const auto& n : scenario.nodes())
    if (n.inc.value() <= Rational(0) || n.dec.value() < n.inc.value())
      throw PreconditionError("non-jumping enumeration needs dec >= inc > 0 (node " +
                              std::to_string(n.id) + ")");
}

SolveResult order_result(const Scenario& scenario, const std::vector<NodeId>& order,
                         const Rational& value) {
  SolveResult result = finish(scenario, expand_order(scenario, order), SolveMethod::NonJumpEnum, true);
  if (result.reward != value)
    throw std::logic_error("non-jumping witness does not reproduce its reward");
  return result;
}

}  // namespace

SolveResult enumerate_nonjumping_optimal_serial(const Scenario& scenario) {
  require_dec_ge_inc_positive(scenario);
  OrderSearch search(scenario, max_repair_bound(scenario).L);
  search.run_all();
  return order_result(scenario, search.best_order, search.best_value);
}

SolveResult enumerate_nonjumping_optimal(const Scenario& scenario) {
  require_dec_ge_inc_positive(scenario);
  const std::int64_t limit = max_repair_bound(scenario).L;
  const auto n = static_cast<std::int64_t>(scenario.size());

  std::vector<std::vector<NodeId>> orders(static_cast<std::size_t>(n));
  std::vector<Rational> values(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    OrderSearch search(scenario, limit);
    search.run_from(static_cast<NodeId>(i + 1));
    orders[static_cast<std::size_t>(i)] = std::move(search.best_order);
    values[static_cast<std::size_t>(i)] = search.best_value;
  }

  // Merge in id order with strict improvement: same winner as the serial scan.
  std::vector<NodeId> best;
  Rational best_value;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (values[i] > best_value) {
      best_value = values[i];
      best = orders[i];
    }
  }
  return order_result(scenario, best, best_value);
}

SolveResult max_count_sequence(const Scenario& scenario, SolveMethod method,
                               const BruteForceLimits& limits) {
  Scenario unit = scenario.with_unit_weights();
  SolveResult counted;
  switch (method) {
    case SolveMethod::BruteForce: counted = brute_force_optimal(unit, std::nullopt, limits); break;
    case SolveMethod::NonJumpEnum: counted = enumerate_nonjumping_optimal(unit); break;
    default: throw InputError("max-count solver must be brute or nonjump-enum");
  }
  return finish(scenario, std::move(counted.sequence), method, counted.exhaustive);
}

SolveResult solve_auto(const Scenario& scenario, const BruteForceLimits& limits) {
  RegimeReport regime = classify_regime(scenario);
  auto run_policy = [&](PolicyKind kind, SolveMethod method) {
    Trace trace = simulate_policy(scenario, kind, default_horizon(scenario));
    if (trace.truncated) throw std::logic_error("regime policy did not terminate");
    return finish(scenario, trace.actions(), method, true);
  };

  if (std::holds_alternative<regime::Theorem3Applicable>(regime))
    return run_policy(policy::HealthiestFirst{}, SolveMethod::Theorem3Policy);
  if (auto* t5 = std::get_if<regime::Theorem5Applicable>(&regime))
    return run_policy(policy::LeastModifiedHealthInSet{t5->z}, SolveMethod::Theorem5Policy);
  if (std::holds_alternative<regime::Prop1Applicable>(regime))
    return run_policy(policy::LeastModifiedHealthGlobal{}, SolveMethod::Prop1Policy);
  const bool all_repairable = std::all_of(scenario.nodes().begin(), scenario.nodes().end(),
                                          [](const NodeSpec& n) { return n.inc.value() > Rational(0); });
  if (std::holds_alternative<regime::DecGeInc>(regime) && all_repairable)
    return enumerate_nonjumping_optimal(scenario);

  try {
    return brute_force_optimal(scenario, std::nullopt, limits);
  } catch (const SolverLimitError& e) {
    throw SolverLimitError("regime " + regime_name(regime) + ": no exact policy applies and " + std::string(e.what()));
  }
}

}  // namespace recov
