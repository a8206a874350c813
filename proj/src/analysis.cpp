#include "recov/analysis.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "recov/policies.hpp"

namespace recov {

std::int64_t repair_time(const Rational& v, const Rational& inc) {
  if (inc <= Rational(0)) throw PreconditionError("repair time undefined for a zero repair rate");
  return ceil_div(Rational(1) - v, inc);
}

std::vector<std::int64_t> AValues::milestones() const {
  std::vector<std::int64_t> out;
  std::int64_t total = 0;
  for (std::int64_t t : times) out.push_back(total += t);
  return out;
}

AValues a_values(const Scenario& scenario, std::span<const NodeId> order) {
  std::set<NodeId> seen;
  for (NodeId id : order) {
    if (!scenario.contains(id)) throw InputError("order contains unknown node id " + std::to_string(id));
    if (!seen.insert(id).second) throw InputError("order repeats node id " + std::to_string(id));
    if (scenario.inc(id) == Rational(0))
      throw PreconditionError("node " + std::to_string(id) + " has a zero repair rate");
  }

  AValues out;
  out.order.assign(order.begin(), order.end());
  std::int64_t elapsed = 0;
  for (NodeId id : order) {
    Rational a = scenario.v0(id) - scenario.dec(id) * Rational(elapsed);
    out.a.push_back(a);
    if (a <= Rational(0)) break;
    std::int64_t t = repair_time(a, scenario.inc(id));
    out.times.push_back(t);
    elapsed += t;
  }
  return out;
}

Feasibility nonjumping_feasible(const Scenario& scenario, std::span<const NodeId> order) {
  AValues av = a_values(scenario, order);
  for (std::size_t k = 0; k < av.a.size(); ++k)
    if (av.a[k] <= Rational(0)) return Feasibility{false, k + 1};
  return Feasibility{true, std::nullopt};
}

bool dec_ge_inc(const Scenario& scenario) {
  return std::all_of(scenario.nodes().begin(), scenario.nodes().end(),
                     [](const NodeSpec& n) { return n.dec.value() >= n.inc.value(); });
}

BoundReport max_repair_bound(const Scenario& scenario) {
  std::int64_t n = std::numeric_limits<std::int64_t>::max();
  Rational min_dec(1);
  for (const auto& node : scenario.nodes()) {
    const Rational& inc = node.inc.value();
    const Rational& dec = node.dec.value();
    if (inc <= Rational(0) || dec < inc)
      throw PreconditionError("repair bound needs dec >= inc > 0 for every node (node " +
                              std::to_string(node.id) + ")");
    n = std::min(n, floor_div(dec, inc));
    min_dec = min(min_dec, dec);
  }
  // floor(log_{1+n}(n / min_dec + 1)) by exact power search
  const Rational target = Rational(n) / min_dec + Rational(1);
  std::int64_t k = 0;
  Rational power(1);
  while (power * Rational(1 + n) <= target) {
    power *= Rational(1 + n);
    ++k;
  }
  return BoundReport{n, std::min<std::int64_t>(static_cast<std::int64_t>(scenario.size()), k + 1)};
}

std::int64_t survival_count(const Scenario& scenario) {
  // nullopt stands for an unbounded survival time (dec = 0).
  std::vector<std::optional<std::int64_t>> ceils;
  for (const auto& node : scenario.nodes()) {
    if (node.dec.value() == Rational(0))
      ceils.push_back(std::nullopt);
    else
      ceils.push_back(ceil_div(node.v0.value(), node.dec.value()));
  }
  auto exceeds = [](const std::optional<std::int64_t>& c, std::int64_t x) { return !c || *c > x; };
  auto less = [](const std::optional<std::int64_t>& a, const std::optional<std::int64_t>& b) {
    if (!a) return false;
    return !b || *a < *b;
  };

  std::vector<bool> removed(ceils.size(), false);
  std::int64_t x = 0;
  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < ceils.size(); ++j) {
      if (removed[j] || !exceeds(ceils[j], x)) continue;
      if (!pick || less(ceils[j], ceils[*pick])) pick = j;
    }
    if (!pick) return x;
    removed[*pick] = true;
    ++x;
  }
}

std::vector<NodeId> build_target_set(const Scenario& scenario, std::int64_t x) {
  if (x < 0 || x > static_cast<std::int64_t>(scenario.size()))
    throw InputError("target set size out of range");
  std::vector<bool> taken(scenario.size(), false);
  std::vector<NodeId> z;
  for (std::int64_t r = 1; r <= x; ++r) {
    std::optional<NodeId> pick;
    for (const auto& node : scenario.nodes()) {
      if (taken[static_cast<std::size_t>(node.id - 1)]) continue;
      if (node.v0.value() <= Rational(x - r) * node.dec.value()) continue;
      if (!pick || node.w.value() > scenario.weight(*pick)) pick = node.id;
    }
    if (!pick)
      throw std::logic_error("no eligible node at stage " + std::to_string(r) +
                             "; x exceeds the survival count");
    taken[static_cast<std::size_t>(*pick - 1)] = true;
    z.push_back(*pick);
  }
  return z;
}

namespace {

// inc_j > factor * dec_j and inc_j > sum of dec over the rest of `members`.
ConditionCheck fast_repair_conditions(const Scenario& scenario, std::span<const NodeId> members) {
  const std::int64_t factor = static_cast<std::int64_t>(members.size()) - 1;
  Rational total_dec;
  for (NodeId id : members) total_dec += scenario.dec(id);
  for (NodeId id : members) {
    const Rational& inc = scenario.inc(id);
    Rational scaled = Rational(factor) * scenario.dec(id);
    if (!(inc > scaled)) {
      std::ostringstream os;
      os << "node " << id << ": inc " << inc << " <= " << factor << " * dec " << scenario.dec(id);
      return ConditionCheck{false, os.str()};
    }
    Rational others = total_dec - scenario.dec(id);
    if (!(inc > others)) {
      std::ostringstream os;
      os << "node " << id << ": inc " << inc << " <= sum of other dec " << others;
      return ConditionCheck{false, os.str()};
    }
  }
  return ConditionCheck{true, {}};
}

std::vector<NodeId> all_ids(const Scenario& scenario) {
  std::vector<NodeId> ids;
  for (const auto& n : scenario.nodes()) ids.push_back(n.id);
  return ids;
}

}  // namespace

ConditionCheck theorem5_conditions(const Scenario& scenario, std::span<const NodeId> z) {
  std::set<NodeId> seen;
  for (NodeId id : z) {
    if (!scenario.contains(id)) throw InputError("target set contains unknown node id " + std::to_string(id));
    if (!seen.insert(id).second) throw InputError("target set repeats node id " + std::to_string(id));
  }
  if (z.empty()) return ConditionCheck{false, "empty target set"};
  return fast_repair_conditions(scenario, z);
}

ConditionCheck prop1_conditions(const Scenario& scenario) {
  const auto& nodes = scenario.nodes();
  for (const auto& n : nodes)
    if (n.w.value() != nodes.front().w.value())
      return ConditionCheck{false, "weights are not homogeneous"};
  auto ids = all_ids(scenario);
  return fast_repair_conditions(scenario, ids);
}

Theorem3Check theorem3_conditions(const Scenario& scenario) {
  Theorem3Check out;
  const auto& nodes = scenario.nodes();
  const NodeSpec& first = nodes.front();
  for (const auto& n : nodes) {
    if (n.inc != first.inc || n.dec != first.dec) {
      out.violation = "rates are not homogeneous";
      return out;
    }
    if (n.w != first.w) {
      out.violation = "weights are not homogeneous";
      return out;
    }
  }
  const Rational& inc = first.inc.value();
  const Rational& dec = first.dec.value();
  if (inc == Rational(0)) {
    out.violation = "repair rate is zero";
    return out;
  }
  Rational ratio = dec / inc;
  if (!ratio.is_integer() || ratio < Rational(1)) {
    out.violation = "dec / inc = " + ratio.to_string() + " is not a positive integer";
    return out;
  }
  out.n = ratio.num();
  for (const auto& n : nodes) {
    Rational m = (Rational(1) - n.v0.value()) / inc;
    if (!m.is_integer() || m < Rational(1)) {
      out.violation = "node " + std::to_string(n.id) + ": (1 - v0) / inc = " + m.to_string() +
                      " is not a positive integer";
      out.m.clear();
      return out;
    }
    out.m.push_back(m.num());
  }
  out.holds = true;
  return out;
}

RegimeReport classify_regime(const Scenario& scenario) {
  if (dec_ge_inc(scenario)) {
    if (Theorem3Check t3 = theorem3_conditions(scenario))
      return regime::Theorem3Applicable{t3.n, t3.m};
    return regime::DecGeInc{};
  }
  if (prop1_conditions(scenario)) return regime::Prop1Applicable{};
  std::int64_t x = survival_count(scenario);
  std::vector<NodeId> z = build_target_set(scenario, x);
  if (theorem5_conditions(scenario, z)) return regime::Theorem5Applicable{x, z};
  return regime::Gap{};
}

std::string regime_name(const RegimeReport& report) {
  static constexpr const char* kNames[] = {"DecGeInc", "Theorem3", "Theorem5", "Prop1", "Gap"};
  return kNames[report.index()];
}

namespace {

bool is_subset(const std::vector<NodeId>& small, const std::vector<NodeId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

ControlSequence flatten_jumps(const Scenario& scenario, const ControlSequence& sequence) {
  if (!dec_ge_inc(scenario)) throw PreconditionError("flatten_jumps needs dec >= inc for every node");
  for (const auto& a : sequence)
    if (!scenario.contains(a.target)) throw InputError("sequence targets unknown node " + std::to_string(a.target));

  const auto horizon_of = [](const ControlSequence& s) { return static_cast<std::int64_t>(s.size()); };

  Trace input = simulate_sequence(scenario, sequence, horizon_of(sequence));
  RewardReport input_reward = reward(scenario, input);
  const std::set<NodeId> repaired(input_reward.repaired_set.begin(), input_reward.repaired_set.end());
  const std::int64_t input_completion = completion_time(input);

  ControlSequence current;
  for (const auto& a : sequence)
    if (repaired.count(a.target)) current.push_back(a);

  while (true) {
    Trace trace = simulate_sequence(scenario, current, horizon_of(current));
    std::vector<std::int64_t> jumps = jump_times(trace);
    if (jumps.empty()) break;

    // Last jump at T: keep u_0..u_{T-2}; the suffix from T-1 holds exactly one jump.
    const auto T = static_cast<std::size_t>(jumps.back());
    const SystemState pivot = trace.state_at(T - 1);
    ControlSequence rebuilt(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(T - 1));

    std::vector<NodeId> order;
    for (std::size_t i = T; i < current.size(); ++i) {
      NodeId id = current[i].target;
      if (pivot.active(id) && std::find(order.begin(), order.end(), id) == order.end())
        order.push_back(id);
    }
    Policy executor(policy::NonJumpingOrder{order});
    Trace tail = simulate_policy_from(scenario, pivot, executor, default_horizon(scenario));
    for (const auto& a : tail.actions()) rebuilt.push_back(a);
    current = std::move(rebuilt);
  }

  Trace output = simulate_sequence(scenario, current, horizon_of(current));
  RewardReport output_reward = reward(scenario, output);
  if (!is_non_jumping(output) ||
      !is_subset(input_reward.repaired_set, output_reward.repaired_set) ||
      completion_time(output) > input_completion)
    throw std::logic_error("flatten_jumps postcondition violated");
  return current;
}

}  // namespace recov
