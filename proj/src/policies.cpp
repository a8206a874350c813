#include "recov/policies.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <type_traits>

#include "recov/analysis.hpp"

namespace recov {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t Rng::stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1342543de82ef95ULL + 1));
}

namespace {

std::vector<NodeId> active_nodes(const SystemState& state) {
  std::vector<NodeId> out;
  for (std::size_t j = 0; j < state.statuses.size(); ++j)
    if (state.statuses[j] == NodeStatus::Active) out.push_back(static_cast<NodeId>(j + 1));
  return out;
}

// Lowest key wins; ties go to the lowest id since candidates are ascending.
template <class Key>
PolicyDecision argmin_active(const SystemState& state, std::span<const NodeId> candidates,
                             Key key) {
  PolicyDecision best;
  Rational best_key;
  for (NodeId id : candidates) {
    if (!state.active(id)) continue;
    Rational k = key(id);
    if (!best || k < best_key) {
      best = Action{id};
      best_key = k;
    }
  }
  return best;
}

void check_ids(std::span<const NodeId> ids, const Scenario& scenario, const char* what) {
  std::set<NodeId> seen;
  for (NodeId id : ids) {
    if (!scenario.contains(id))
      throw InputError(std::string(what) + " contains unknown node id " + std::to_string(id));
    if (!seen.insert(id).second)
      throw InputError(std::string(what) + " repeats node id " + std::to_string(id));
  }
}

}  // namespace

PolicyDecision healthiest_first(const SystemState& state, const Scenario&) {
  auto ids = active_nodes(state);
  return argmin_active(state, ids, [&](NodeId id) { return -state.health(id); });
}

PolicyDecision least_modified_health_global(const SystemState& state, const Scenario& scenario) {
  auto ids = active_nodes(state);
  return argmin_active(state, ids,
                       [&](NodeId id) { return modified_health(state, scenario, id); });
}

PolicyDecision least_modified_health_in_set(const SystemState& state, const Scenario& scenario,
                                            std::span<const NodeId> z) {
  check_ids(z, scenario, "target set");
  std::vector<NodeId> sorted(z.begin(), z.end());
  std::sort(sorted.begin(), sorted.end());
  return argmin_active(state, sorted,
                       [&](NodeId id) { return modified_health(state, scenario, id); });
}

PolicyDecision non_jumping_executor(const SystemState& state, const Scenario& scenario,
                                    std::span<const NodeId> order) {
  for (NodeId id : order) {
    if (!scenario.contains(id)) throw InputError("order contains unknown node id " + std::to_string(id));
    if (state.active(id)) return Action{id};
  }
  return std::nullopt;
}

PolicyDecision random_any(const SystemState& state, const Scenario&, Rng& rng) {
  auto ids = active_nodes(state);
  if (ids.empty()) return std::nullopt;
  return Action{ids[rng.uniform_index(ids.size())]};
}

PolicyDecision random_non_jumping(const SystemState& state, const Scenario& scenario, Rng& rng,
                                  std::optional<NodeId>& commitment) {
  if (commitment && state.active(*commitment)) return Action{*commitment};
  PolicyDecision d = random_any(state, scenario, rng);
  commitment = d ? std::optional<NodeId>(d->target) : std::nullopt;
  return d;
}

namespace {

std::uint64_t seed_of(const PolicyKind& kind) {
  return std::visit(
      []<class P>(const P& p) -> std::uint64_t {
        if constexpr (std::is_same_v<P, policy::RandomAny> || std::is_same_v<P, policy::RandomNonJumping>)
          return p.seed;
        else
          return 0;
      },
      kind);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Policy::Policy(PolicyKind kind) : kind_(std::move(kind)), rng_(seed_of(kind_)) {}

PolicyDecision Policy::decide(const SystemState& state, const Scenario& scenario) {
  return std::visit(
      overloaded{
          [&](const policy::HealthiestFirst&) { return healthiest_first(state, scenario); },
          [&](const policy::LeastModifiedHealthGlobal&) {
            return least_modified_health_global(state, scenario);
          },
          [&](const policy::LeastModifiedHealthInSet& p) {
            return least_modified_health_in_set(state, scenario, p.z);
          },
          [&](const policy::NonJumpingOrder& p) {
            return non_jumping_executor(state, scenario, p.order);
          },
          [&](const policy::RandomAny&) { return random_any(state, scenario, rng_); },
          [&](const policy::RandomNonJumping&) {
            return random_non_jumping(state, scenario, rng_, commitment_);
          },
      },
      kind_);
}

void validate(const PolicyKind& kind, const Scenario& scenario) {
  if (auto* p = std::get_if<policy::LeastModifiedHealthInSet>(&kind)) {
    if (p->z.empty()) throw InputError("target set must not be empty");
    check_ids(p->z, scenario, "target set");
  }
  if (auto* p = std::get_if<policy::NonJumpingOrder>(&kind)) check_ids(p->order, scenario, "order");
}

std::vector<NodeId> parse_id_list(std::string_view text) {
  std::vector<NodeId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    NodeId id = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw InputError("malformed node list '" + std::string(text) + "'");
    out.push_back(id);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

PolicyKind parse_policy(std::string_view name, const Scenario& scenario, std::uint64_t seed) {
  PolicyKind kind;
  if (name == "healthiest-first") {
    kind = policy::HealthiestFirst{};
  } else if (name == "least-mod-global") {
    kind = policy::LeastModifiedHealthGlobal{};
  } else if (name == "least-mod-in-z") {
    kind = policy::LeastModifiedHealthInSet{build_target_set(scenario, survival_count(scenario))};
  } else if (name.starts_with("order:")) {
    kind = policy::NonJumpingOrder{parse_id_list(name.substr(6))};
  } else if (name == "random") {
    kind = policy::RandomAny{seed};
  } else if (name == "random-nonjumping") {
    kind = policy::RandomNonJumping{seed};
  } else {
    throw InputError("unknown policy '" + std::string(name) + "'");
  }
  validate(kind, scenario);
  return kind;
}

std::string policy_name(const PolicyKind& kind) {
  auto join = [](const std::vector<NodeId>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    return os.str();
  };
  return std::visit(overloaded{
                        [](const policy::HealthiestFirst&) -> std::string { return "healthiest-first"; },
                        [](const policy::LeastModifiedHealthGlobal&) -> std::string {
                          return "least-mod-global";
                        },
                        [](const policy::LeastModifiedHealthInSet&) -> std::string {
                          return "least-mod-in-z";
                        },
                        [&](const policy::NonJumpingOrder& p) { return "order:" + join(p.order); },
                        [](const policy::RandomAny&) -> std::string { return "random"; },
                        [](const policy::RandomNonJumping&) -> std::string {
                          return "random-nonjumping";
                        },
                    },
                    kind);
}

Trace simulate_policy_from(const Scenario& scenario, const SystemState& start, Policy& policy,
                           std::int64_t horizon) {
  if (horizon < 0) throw InputError("horizon must be nonnegative");
  validate(policy.kind(), scenario);
  SystemState state = validated(start, scenario);

  Trace trace = Trace::starting_at(state);

  std::int64_t steps = 0;
  while (state.any_active()) {
    if (horizon == 0) break;
    PolicyDecision d = policy.decide(state, scenario);
    if (!d) break;
    if (!scenario.contains(d->target))
      throw std::logic_error("policy returned unknown node id " + std::to_string(d->target));
    if (steps >= horizon) {
      trace.truncated = true;
      break;
    }
    SystemState next = step(state, scenario, *d);
    append_step(trace, state, next, d->target);
    state = std::move(next);
    ++steps;
  }
  return trace;
}

Trace simulate_policy(const Scenario& scenario, Policy& policy, std::int64_t horizon) {
  return simulate_policy_from(scenario, SystemState::initial(scenario), policy, horizon);
}

Trace simulate_policy(const Scenario& scenario, const PolicyKind& kind, std::int64_t horizon) {
  Policy p(kind);
  return simulate_policy(scenario, p, horizon);
}

ControlSequence expand_order(const Scenario& scenario, std::span<const NodeId> order) {
  Policy p(policy::NonJumpingOrder{{order.begin(), order.end()}});
  return simulate_policy(scenario, p, default_horizon(scenario)).actions();
}

}  // namespace recov
