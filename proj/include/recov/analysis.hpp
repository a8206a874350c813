#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "recov/model.hpp"

namespace recov {

// A regime-specific operation was called outside its rate regime.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ceil((1 - v) / inc). Throws PreconditionError when inc = 0.
std::int64_t repair_time(const Rational& v, const Rational& inc);

// Health A_k of the k-th node of a non-jumping order at the moment the
// entity reaches it, and the steps t_k it then needs. Stops after the first
// A_k <= 0 (that node has failed before being reached).
struct AValues {
  std::vector<NodeId> order;
  std::vector<Rational> a;
  std::vector<std::int64_t> times;  // defined for each A_k > 0

  // Cumulative repair milestones (t_1, t_1 + t_2, ...).
  std::vector<std::int64_t> milestones() const;
};

AValues a_values(const Scenario& scenario, std::span<const NodeId> order);

struct Feasibility {
  bool feasible = false;
  std::optional<std::size_t> first_violation;  // 1-based position in the order
};

Feasibility nonjumping_feasible(const Scenario& scenario, std::span<const NodeId> order);

struct BoundReport {
  std::int64_t n = 0;  // min_j floor(dec_j / inc_j)
  std::int64_t L = 0;  // max nodes any non-jumping sequence can repair
};

// Requires dec_j >= inc_j > 0 for all j.
BoundReport max_repair_bound(const Scenario& scenario);

// Largest x such that some x nodes can be ordered with v0 > (x - r) dec for
// their positions r = 1..x (greedy by ceil(v0 / dec); dec = 0 never fails).
std::int64_t survival_count(const Scenario& scenario);

// Ordered target set (i_1, ..., i_x): at stage r pick the heaviest remaining
// node with v0 > (x - r) dec, ties to the lowest id.
std::vector<NodeId> build_target_set(const Scenario& scenario, std::int64_t x);

// Verdict plus a human-readable description of the first violated inequality.
struct ConditionCheck {
  bool holds = false;
  std::string violation;
  explicit operator bool() const { return holds; }
};

ConditionCheck theorem5_conditions(const Scenario& scenario, std::span<const NodeId> z);
ConditionCheck prop1_conditions(const Scenario& scenario);

struct Theorem3Check {
  bool holds = false;
  std::int64_t n = 0;
  std::vector<std::int64_t> m;  // m_j with 1 - v0_j = m_j inc
  std::string violation;
  explicit operator bool() const { return holds; }
};

Theorem3Check theorem3_conditions(const Scenario& scenario);

bool dec_ge_inc(const Scenario& scenario);

namespace regime {
struct DecGeInc {};
struct Theorem3Applicable {
  std::int64_t n = 0;
  std::vector<std::int64_t> m;
};
struct Theorem5Applicable {
  std::int64_t x = 0;
  std::vector<NodeId> z;
};
struct Prop1Applicable {};
struct Gap {};
}  // namespace regime

using RegimeReport = std::variant<regime::DecGeInc, regime::Theorem3Applicable,
                                  regime::Theorem5Applicable, regime::Prop1Applicable, regime::Gap>;

RegimeReport classify_regime(const Scenario& scenario);
std::string regime_name(const RegimeReport& report);

// Rewrites a (possibly jumping) sequence into a non-jumping one that repairs
// at least the same nodes no later. Requires dec_j >= inc_j for all j.
ControlSequence flatten_jumps(const Scenario& scenario, const ControlSequence& sequence);

}  // namespace recov
