#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recov/analysis.hpp"
#include "recov/model.hpp"

namespace recov {

// The requested search exceeds the configured caps (CLI exit code 4).
class SolverLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolveMethod { BruteForce, NonJumpEnum, Theorem3Policy, Theorem5Policy, Prop1Policy };

std::string_view method_name(SolveMethod method);

struct SolveResult {
  Rational reward;
  ControlSequence sequence;
  std::vector<NodeId> repaired_set;  // ascending
  SolveMethod method = SolveMethod::BruteForce;
  bool exhaustive = false;
};

struct BruteForceLimits {
  std::size_t node_cap = 4;
  std::int64_t horizon_cap = 60;
  // Only Active nodes are tried as actions. Disable to search every node.
  bool prune_absorbed = true;
};

// sum_j ceil(1 / inc_j) + max_j ceil(v0_j / dec_j), skipping zero rates.
std::int64_t default_brute_horizon(const Scenario& scenario);

// Breadth-first search over exact health vectors, each reachable vector
// expanded once. Best = max repaired weight, then fewest steps, then the
// lexicographically smallest action sequence.
SolveResult brute_force_optimal(const Scenario& scenario, std::optional<std::int64_t> horizon = {},
                                const BruteForceLimits& limits = {});

// Requires dec_j >= inc_j > 0. Searches ordered selections of at most L
// distinct nodes with the A_k recursion. Fans out over the first node.
SolveResult enumerate_nonjumping_optimal(const Scenario& scenario);
SolveResult enumerate_nonjumping_optimal_serial(const Scenario& scenario);

// Solves the unit-weight copy with `method` (BruteForce or NonJumpEnum) and
// reports the resulting sequence under the real weights.
SolveResult max_count_sequence(const Scenario& scenario, SolveMethod method,
                               const BruteForceLimits& limits = {});

SolveResult solve_auto(const Scenario& scenario, const BruteForceLimits& limits = {});

}  // namespace recov
