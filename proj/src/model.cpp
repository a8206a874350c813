#include "recov/model.hpp"

#include <algorithm>
#include <utility>

namespace recov {

Scenario::Scenario(std::vector<NodeSpec> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw InputError("a scenario needs at least 2 nodes");
  std::sort(nodes_.begin(), nodes_.end(),
            [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const NodeSpec& n = nodes_[i];
    if (n.id != static_cast<NodeId>(i + 1))
      throw InputError("node ids must be exactly 1..N without duplicates");
    if (n.v0.value() <= Rational(0) || n.v0.value() >= Rational(1))
      throw InputError("initial health of node " + std::to_string(n.id) + " must lie in (0,1)");
  }
}

const NodeSpec& Scenario::node(NodeId id) const {
  if (!contains(id)) throw InputError("unknown node id " + std::to_string(id));
  return nodes_[static_cast<std::size_t>(id - 1)];
}

Scenario Scenario::with_unit_weights() const {
  std::vector<NodeSpec> nodes = nodes_;
  for (auto& n : nodes) n.w = Weight(Rational(1));
  return Scenario(std::move(nodes));
}

std::string_view to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Active: return "active";
    case NodeStatus::Repaired: return "repaired";
    case NodeStatus::Failed: return "failed";
  }
  return "?";
}

NodeStatus parse_status(std::string_view text) {
  if (text == "active") return NodeStatus::Active;
  if (text == "repaired") return NodeStatus::Repaired;
  if (text == "failed") return NodeStatus::Failed;
  throw InputError("unknown node status '" + std::string(text) + "'");
}

SystemState SystemState::initial(const Scenario& scenario) {
  SystemState s;
  for (const auto& n : scenario.nodes()) {
    s.healths.push_back(n.v0.value());
    s.statuses.push_back(NodeStatus::Active);
  }
  return s;
}

bool SystemState::any_active() const {
  return std::find(statuses.begin(), statuses.end(), NodeStatus::Active) != statuses.end();
}

ControlSequence make_sequence(std::initializer_list<NodeId> targets) {
  ControlSequence seq;
  for (NodeId id : targets) seq.push_back(Action{id});
  return seq;
}

std::vector<NodeId> targets_of(const ControlSequence& sequence) {
  std::vector<NodeId> out;
  out.reserve(sequence.size());
  for (const auto& a : sequence) out.push_back(a.target);
  return out;
}

SystemState Trace::state_at(std::size_t row) const {
  const TraceRow& r = rows.at(row);
  return SystemState{r.t, r.healths, r.statuses};
}

SystemState Trace::final_state() const { return state_at(rows.size() - 1); }

ControlSequence Trace::actions() const {
  ControlSequence seq;
  for (const auto& r : rows)
    if (r.action) seq.push_back(Action{*r.action});
  return seq;
}

SystemState validated(const SystemState& state, const Scenario& scenario) {
  if (state.healths.size() != scenario.size() || state.statuses.size() != scenario.size())
    throw InputError("state does not match scenario size");
  for (std::size_t j = 0; j < state.healths.size(); ++j) {
    const Rational& v = state.healths[j];
    if (v < Rational(0) || v > Rational(1)) throw InputError("health outside [0,1]");
    NodeStatus s = state.statuses[j];
    if (s == NodeStatus::Repaired && v != Rational(1))
      throw InputError("repaired node must have health 1");
    if (s == NodeStatus::Failed && v != Rational(0))
      throw InputError("failed node must have health 0");
    if (s == NodeStatus::Active && (v == Rational(0) || v == Rational(1)))
      throw InputError("active node must have health in (0,1)");
  }
  return state;
}

SystemState step(const SystemState& state, const Scenario& scenario, Action action) {
  if (!scenario.contains(action.target))
    throw InputError("action targets unknown node " + std::to_string(action.target));
  if (state.healths.size() != scenario.size() || state.statuses.size() != scenario.size())
    throw InputError("state does not match scenario size");

  SystemState next;
  next.t = state.t + 1;
  next.healths = state.healths;
  next.statuses = state.statuses;
  const auto& nodes = scenario.nodes();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (state.statuses[j] != NodeStatus::Active) continue;
    Rational& v = next.healths[j];
    if (nodes[j].id == action.target) {
      v = min(Rational(1), v + nodes[j].inc.value());
      if (v == Rational(1)) next.statuses[j] = NodeStatus::Repaired;
    } else {
      v = max(Rational(0), v - nodes[j].dec.value());
      if (v == Rational(0)) next.statuses[j] = NodeStatus::Failed;
    }
  }
  return next;
}

Trace Trace::starting_at(const SystemState& start) {
  Trace trace;
  trace.rows.push_back(TraceRow{start.t, std::nullopt, start.healths, start.statuses});
  trace.repair_time.assign(start.statuses.size(), std::nullopt);
  trace.fail_time.assign(start.statuses.size(), std::nullopt);
  return trace;
}

void append_step(Trace& trace, const SystemState& prev, const SystemState& next, NodeId action) {
  trace.rows.push_back(TraceRow{next.t, action, next.healths, next.statuses});
  for (std::size_t j = 0; j < next.statuses.size(); ++j) {
    if (prev.statuses[j] != NodeStatus::Active) continue;
    if (next.statuses[j] == NodeStatus::Repaired) trace.repair_time[j] = next.t;
    if (next.statuses[j] == NodeStatus::Failed) trace.fail_time[j] = next.t;
  }
}

Trace simulate_sequence_from(const Scenario& scenario, const SystemState& start,
                             const ControlSequence& sequence, std::int64_t horizon) {
  if (horizon < 0) throw InputError("horizon must be nonnegative");
  SystemState state = validated(start, scenario);
  Trace trace = Trace::starting_at(state);
  std::size_t next = 0;
  std::int64_t steps = 0;
  while (next < sequence.size() && state.any_active()) {
    if (steps >= horizon) {
      trace.truncated = horizon > 0;
      break;
    }
    SystemState after = step(state, scenario, sequence[next]);
    append_step(trace, state, after, sequence[next].target);
    state = std::move(after);
    ++next;
    ++steps;
  }
  return trace;
}

Trace simulate_sequence(const Scenario& scenario, const ControlSequence& sequence,
                        std::int64_t horizon) {
  return simulate_sequence_from(scenario, SystemState::initial(scenario), sequence, horizon);
}

RewardReport reward(const Scenario& scenario, const Trace& trace) {
  RewardReport report;
  for (std::size_t j = 0; j < trace.repair_time.size(); ++j) {
    if (!trace.repair_time[j]) continue;
    NodeId id = static_cast<NodeId>(j + 1);
    report.repaired_set.push_back(id);
    report.reward += scenario.weight(id);
  }
  return report;
}

Rational modified_health(const SystemState& state, const Scenario& scenario, NodeId node) {
  return state.health(node) - scenario.dec(node);
}

std::vector<std::int64_t> jump_times(const Trace& trace) {
  std::vector<std::int64_t> out;
  for (std::size_t r = 2; r < trace.rows.size(); ++r) {
    const auto& prev = trace.rows[r - 1];
    const auto& cur = trace.rows[r];
    if (!prev.action || !cur.action) continue;
    NodeId j = *prev.action;
    // rows[r-1] holds v_t for t = prev.t, reached by u_{t-1} = j; cur.action is u_t.
    if (prev.healths[static_cast<std::size_t>(j - 1)] < Rational(1) && *cur.action != j)
      out.push_back(prev.t);
  }
  return out;
}

bool is_non_jumping(const Trace& trace) { return jump_times(trace).empty(); }

std::int64_t completion_time(const Trace& trace) {
  std::int64_t last = 0;
  for (const auto& t : trace.repair_time)
    if (t) last = std::max(last, *t);
  return last;
}

std::int64_t default_horizon(const Scenario& scenario) {
  std::int64_t sum = 0;
  for (const auto& n : scenario.nodes()) {
    if (n.inc.value() == Rational(0)) return 10000;
    sum += ceil_div(Rational(1), n.inc.value());
  }
  return 10 * sum;
}

}  // namespace recov
