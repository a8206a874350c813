#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "recov/model.hpp"

namespace recov {

// nullopt means Abstain: the policy has no selectable node left.
using PolicyDecision = std::optional<Action>;

// Portable seeded generator: std::mt19937_64 (algorithm fixed by the
// standard) plus an unbiased rejection-sampled bounded draw, so histograms
// reproduce bit-for-bit across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). n > 0.
  std::uint64_t uniform_index(std::uint64_t n);

  // Seed of the independent stream for sample `index` of a run seeded with `seed`.
  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

PolicyDecision healthiest_first(const SystemState& state, const Scenario& scenario);
PolicyDecision least_modified_health_global(const SystemState& state, const Scenario& scenario);
PolicyDecision least_modified_health_in_set(const SystemState& state, const Scenario& scenario,
                                            std::span<const NodeId> z);
PolicyDecision non_jumping_executor(const SystemState& state, const Scenario& scenario,
                                    std::span<const NodeId> order);
PolicyDecision random_any(const SystemState& state, const Scenario& scenario, Rng& rng);
PolicyDecision random_non_jumping(const SystemState& state, const Scenario& scenario, Rng& rng,
                                  std::optional<NodeId>& commitment);

namespace policy {
struct HealthiestFirst {};
struct LeastModifiedHealthGlobal {};
struct LeastModifiedHealthInSet {
  std::vector<NodeId> z;
};
struct NonJumpingOrder {
  std::vector<NodeId> order;
};
struct RandomAny {
  std::uint64_t seed = 0;
};
struct RandomNonJumping {
  std::uint64_t seed = 0;
};
}  // namespace policy

using PolicyKind =
    std::variant<policy::HealthiestFirst, policy::LeastModifiedHealthGlobal,
                 policy::LeastModifiedHealthInSet, policy::NonJumpingOrder, policy::RandomAny,
                 policy::RandomNonJumping>;

// A policy instance with its own generator and commitment memory.
class Policy {
 public:
  explicit Policy(PolicyKind kind);

  PolicyDecision decide(const SystemState& state, const Scenario& scenario);
  const PolicyKind& kind() const { return kind_; }

 private:
  PolicyKind kind_;
  Rng rng_;
  std::optional<NodeId> commitment_;
};

// Checks set/order contents against the scenario (known ids, no duplicates).
void validate(const PolicyKind& kind, const Scenario& scenario);

// CLI names: healthiest-first, least-mod-global, least-mod-in-z,
// order:<comma list>, random, random-nonjumping. least-mod-in-z uses the set
// built from the scenario's survival count.
PolicyKind parse_policy(std::string_view name, const Scenario& scenario, std::uint64_t seed = 0);
std::string policy_name(const PolicyKind& kind);

std::vector<NodeId> parse_id_list(std::string_view text);

// Runs the policy until every node is absorbed, it abstains, or the horizon
// fires (truncated is then set if the policy still had a move).
Trace simulate_policy(const Scenario& scenario, Policy& policy, std::int64_t horizon);
Trace simulate_policy(const Scenario& scenario, const PolicyKind& kind, std::int64_t horizon);
Trace simulate_policy_from(const Scenario& scenario, const SystemState& start, Policy& policy,
                           std::int64_t horizon);

// Per-step actions of a non-jumping order executed from the initial state.
ControlSequence expand_order(const Scenario& scenario, std::span<const NodeId> order);

}  // namespace recov
