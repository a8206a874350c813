#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "recov/model.hpp"

namespace recov::scenarios {

// Two nodes (0.95, 0.6), dec 0.7, inc 0.6, unit weights.
Scenario example1();
// Two nodes (0.5, 0.4), weights (1, 2), both rates 0.1.
Scenario example3();
// Three heterogeneous nodes; the least-modified-health-in-Z policy repairs {1, 2}.
Scenario example4();
// Three nodes (0.8, 0.52, 0.73), inc 0.025, dec 0.02, unit weights.
Scenario example5();
// Two nodes (0.9, 0.4), dec 0.6, inc (0.1, 0.6): dec >= inc with unequal rates.
Scenario heterogeneous();
// 15 nodes at 0.99, both rates 0.01.
Scenario case1();
// 15 nodes at 0.05, 0.10, ..., 0.75, dec 0.03, inc 0.75.
Scenario case2();

std::vector<std::string> names();
Scenario by_name(std::string_view name);

// Convenience constructor: rationals given as decimal strings.
struct NodeText {
  std::string v0, w, inc, dec;
};
Scenario from_text(const std::vector<NodeText>& nodes);

}  // namespace recov::scenarios
