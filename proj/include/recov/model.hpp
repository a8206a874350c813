#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recov/rational.hpp"

namespace recov {

// Raised for malformed or inadmissible user input (bad numbers, bad ids,
// inconsistent state). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational constrained to an admissible range, checked on construction.
template <class Tag>
class Quantity {
 public:
  Quantity() = default;
  explicit Quantity(Rational value) : value_(value) {
    if (!Tag::admissible(value_))
      throw InputError(std::string(Tag::kName) + " out of range: " + value_.to_string());
  }

  static Quantity parse(std::string_view text) {
    try {
      return Quantity(Rational::parse(text));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const std::overflow_error& e) {
      throw InputError(e.what());
    }
  }

  const Rational& value() const { return value_; }
  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  Rational value_;
};

struct HealthTag {
  static constexpr std::string_view kName = "health";
  static bool admissible(const Rational& r) { return r >= Rational(0) && r <= Rational(1); }
};
struct RateTag {
  static constexpr std::string_view kName = "rate";
  static bool admissible(const Rational& r) { return r >= Rational(0) && r <= Rational(1); }
};
struct WeightTag {
  static constexpr std::string_view kName = "weight";
  static bool admissible(const Rational& r) { return r >= Rational(0); }
};

using Health = Quantity<HealthTag>;
using Rate = Quantity<RateTag>;
using Weight = Quantity<WeightTag>;

// Node ids are 1-based everywhere in the public API.
using NodeId = int;

struct NodeSpec {
  NodeId id = 0;
  Health v0;
  Weight w;
  Rate inc;  // gained per step while targeted
  Rate dec;  // lost per step while not targeted
};

class Scenario {
 public:
  // Nodes may be given in any order; they are stored sorted by id.
  // Requires N >= 2, ids exactly 1..N, and 0 < v0 < 1.
  explicit Scenario(std::vector<NodeSpec> nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const NodeSpec& node(NodeId id) const;
  bool contains(NodeId id) const { return id >= 1 && static_cast<std::size_t>(id) <= nodes_.size(); }

  const Rational& v0(NodeId id) const { return node(id).v0.value(); }
  const Rational& weight(NodeId id) const { return node(id).w.value(); }
  const Rational& inc(NodeId id) const { return node(id).inc.value(); }
  const Rational& dec(NodeId id) const { return node(id).dec.value(); }

  // Copy with every weight replaced by 1.
  Scenario with_unit_weights() const;

 private:
  std::vector<NodeSpec> nodes_;
};

enum class NodeStatus { Active, Repaired, Failed };

std::string_view to_string(NodeStatus s);
NodeStatus parse_status(std::string_view text);

struct SystemState {
  std::int64_t t = 0;
  std::vector<Rational> healths;
  std::vector<NodeStatus> statuses;

  static SystemState initial(const Scenario& scenario);

  const Rational& health(NodeId id) const { return healths.at(static_cast<std::size_t>(id - 1)); }
  NodeStatus status(NodeId id) const { return statuses.at(static_cast<std::size_t>(id - 1)); }
  bool active(NodeId id) const { return status(id) == NodeStatus::Active; }
  bool any_active() const;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

struct Action {
  NodeId target = 0;
  friend bool operator==(const Action&, const Action&) = default;
};

using ControlSequence = std::vector<Action>;

ControlSequence make_sequence(std::initializer_list<NodeId> targets);
std::vector<NodeId> targets_of(const ControlSequence& sequence);

struct TraceRow {
  std::int64_t t = 0;
  std::optional<NodeId> action;  // action applied to reach this row; none for t = 0
  std::vector<Rational> healths;
  std::vector<NodeStatus> statuses;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct Trace {
  std::vector<TraceRow> rows;
  std::vector<std::optional<std::int64_t>> repair_time;  // indexed by id - 1
  std::vector<std::optional<std::int64_t>> fail_time;
  bool truncated = false;

  static Trace starting_at(const SystemState& start);

  SystemState final_state() const;
  SystemState state_at(std::size_t row) const;
  ControlSequence actions() const;
  std::size_t steps() const { return rows.empty() ? 0 : rows.size() - 1; }

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct RewardReport {
  std::vector<NodeId> repaired_set;  // ascending
  Rational reward;
};

// One application of the switched dynamics. Targeting an absorbed node is
// legal: that node stays put while every active node deteriorates.
SystemState step(const SystemState& state, const Scenario& scenario, Action action);

// Appends the row for `next` and records milestones of nodes absorbed on this step.
void append_step(Trace& trace, const SystemState& prev, const SystemState& next, NodeId action);

SystemState validated(const SystemState& state, const Scenario& scenario);

Trace simulate_sequence(const Scenario& scenario, const ControlSequence& sequence,
                        std::int64_t horizon);
Trace simulate_sequence_from(const Scenario& scenario, const SystemState& start,
                             const ControlSequence& sequence, std::int64_t horizon);

RewardReport reward(const Scenario& scenario, const Trace& trace);

// v - dec; may be negative.
Rational modified_health(const SystemState& state, const Scenario& scenario, NodeId node);

// Time steps t at which a jump occurs: u_{t-1} = j, v_t^j < 1 and u_t != j.
std::vector<std::int64_t> jump_times(const Trace& trace);
bool is_non_jumping(const Trace& trace);

// Latest repair milestone over the repaired nodes, 0 if none were repaired.
std::int64_t completion_time(const Trace& trace);

// 10 * sum_j ceil(1 / inc_j) when every inc_j > 0, else 10000.
std::int64_t default_horizon(const Scenario& scenario);

}  // namespace recov
