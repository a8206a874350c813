#include "recov/scenarios.hpp"

namespace recov::scenarios {

Scenario from_text(const std::vector<NodeText>& nodes) {
  std::vector<NodeSpec> specs;
  NodeId id = 1;
  for (const auto& n : nodes)
    specs.push_back(NodeSpec{id++, Health::parse(n.v0), Weight::parse(n.w), Rate::parse(n.inc),
                             Rate::parse(n.dec)});
  return Scenario(std::move(specs));
}

Scenario example1() { return from_text({{"0.95", "1", "0.6", "0.7"}, {"0.6", "1", "0.6", "0.7"}}); }

Scenario example3() { return from_text({{"0.5", "1", "0.1", "0.1"}, {"0.4", "2", "0.1", "0.1"}}); }

Scenario example4() {
  return from_text({{"0.3", "3", "0.9", "0.4"}, {"0.5", "1", "0.85", "0.3"}, {"0.2", "2", "0.95", "0.4"}});
}

Scenario example5() {
  return from_text(
      {{"0.8", "1", "0.025", "0.02"}, {"0.52", "1", "0.025", "0.02"}, {"0.73", "1", "0.025", "0.02"}});
}

Scenario heterogeneous() { return from_text({{"0.9", "1", "0.1", "0.6"}, {"0.4", "1", "0.6", "0.6"}}); }

Scenario case1() {
  return from_text(std::vector<NodeText>(15, NodeText{"0.99", "1", "0.01", "0.01"}));
}

Scenario case2() {
  std::vector<NodeText> nodes;
  for (int k = 1; k <= 15; ++k) nodes.push_back(NodeText{std::to_string(k) + "/20", "1", "0.75", "0.03"});
  return from_text(nodes);
}

std::vector<std::string> names() {
  return {"example1", "example3", "example4", "example5", "heterogeneous", "case1", "case2"};
}

Scenario by_name(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example3") return example3();
  if (name == "example4") return example4();
  if (name == "example5") return example5();
  if (name == "heterogeneous") return heterogeneous();
  if (name == "case1") return case1();
  if (name == "case2") return case2();
  throw InputError("unknown built-in scenario '" + std::string(name) + "'");
}

}  // namespace recov::scenarios
