#include "recov/model.hpp"

#include <gtest/gtest.h>

#include "recov/policies.hpp"
#include "recov/scenarios.hpp"

namespace recov {
namespace {

Rational R(const char* text) { return Rational::parse(text); }

std::vector<Rational> healths(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(R(v));
  return out;
}

TEST(Quantity, RangesAreChecked) {
  EXPECT_THROW(Health(R("1.5")), InputError);
  EXPECT_THROW(Rate(R("2")), InputError);
  EXPECT_NO_THROW(Weight(R("12")));
  EXPECT_THROW(Health::parse("-0.1"), InputError);
  EXPECT_THROW(Health::parse("0.5.5"), InputError);
  EXPECT_EQ(Rate::parse("0.025").value(), Rational(1, 40));
}

TEST(ScenarioValidation, RejectsBadShapes) {
  auto node = [](NodeId id, const char* v0) {
    return NodeSpec{id, Health::parse(v0), Weight::parse("1"), Rate::parse("0.1"), Rate::parse("0.1")};
  };
  EXPECT_THROW(Scenario({node(1, "0.5")}), InputError);
  EXPECT_THROW(Scenario({node(1, "0.5"), node(1, "0.5")}), InputError);
  EXPECT_THROW(Scenario({node(1, "0.5"), node(3, "0.5")}), InputError);
  EXPECT_THROW(Scenario({node(1, "0"), node(2, "0.5")}), InputError);
  EXPECT_THROW(Scenario({node(1, "1"), node(2, "0.5")}), InputError);
  Scenario sc({node(2, "0.4"), node(1, "0.5")});
  EXPECT_EQ(sc.v0(1), R("0.5"));
  EXPECT_EQ(sc.v0(2), R("0.4"));
  EXPECT_THROW(sc.node(3), InputError);
}

TEST(Step, TargetedNodeRepairsOthersDeteriorate) {
  Scenario sc = scenarios::example4();
  SystemState next = step(SystemState::initial(sc), sc, Action{1});
  EXPECT_EQ(next.t, 1);
  EXPECT_EQ(next.healths, healths({"1", "0.2", "0"}));
  EXPECT_EQ(next.statuses,
            (std::vector<NodeStatus>{NodeStatus::Repaired, NodeStatus::Active, NodeStatus::Failed}));
}

TEST(Step, AbsorbedTargetOnlyAdvancesTime) {
  Scenario sc = scenarios::from_text({{"0.5", "1", "0.5", "0.25"}, {"0.5", "1", "0.25", "0.25"}});
  SystemState s = step(SystemState::initial(sc), sc, Action{1});
  ASSERT_EQ(s.status(1), NodeStatus::Repaired);
  SystemState again = step(s, sc, Action{1});
  EXPECT_EQ(again.t, 2);
  EXPECT_EQ(again.health(1), Rational(1));
  EXPECT_EQ(again.health(2), Rational(0));  // 0.5 - 0.25 - 0.25
  SystemState frozen = step(again, sc, Action{2});
  EXPECT_EQ(frozen.healths, again.healths);
  EXPECT_EQ(frozen.t, 3);
}

TEST(Step, PlainArithmetic) {
  Scenario sc = scenarios::from_text({{"0.5", "1", "0.25", "0.25"}, {"0.5", "1", "0.25", "0.25"}});
  SystemState s = step(SystemState::initial(sc), sc, Action{1});
  EXPECT_EQ(s.healths, healths({"0.75", "0.25"}));
  EXPECT_TRUE(s.active(1) && s.active(2));
  EXPECT_THROW(step(s, sc, Action{3}), InputError);
}

TEST(SimulateSequence, OrderOneTwoThreeOnExample5) {
  Scenario sc = scenarios::example5();
  std::vector<NodeId> order{1, 2, 3};
  Trace trace = simulate_sequence(sc, expand_order(sc, order), 1000);
  EXPECT_EQ(trace.repair_time[0], 8);
  EXPECT_EQ(trace.repair_time[1], 34);
  EXPECT_EQ(trace.repair_time[2], 72);
  EXPECT_EQ(trace.final_state().t, 72);
  EXPECT_FALSE(trace.final_state().any_active());
  EXPECT_FALSE(trace.truncated);
}

TEST(SimulateSequence, OrderOneThreeTwoLosesNodeTwo) {
  Scenario sc = scenarios::example5();
  std::vector<NodeId> order{1, 3, 2};
  Trace trace = simulate_sequence(sc, expand_order(sc, order), 1000);
  EXPECT_EQ(trace.repair_time[0], 8);
  EXPECT_EQ(trace.repair_time[2], 26);
  EXPECT_EQ(trace.fail_time[1], 26);
  EXPECT_EQ(trace.state_at(26).health(2), Rational(0));
}

TEST(SimulateSequence, EmptyAndHorizon) {
  Scenario sc = scenarios::example5();
  Trace empty = simulate_sequence(sc, {}, 10);
  ASSERT_EQ(empty.rows.size(), 1u);
  EXPECT_FALSE(empty.rows[0].action.has_value());

  Trace one = simulate_sequence(sc, make_sequence({1, 1, 1}), 1);
  EXPECT_EQ(one.steps(), 1u);
  EXPECT_TRUE(one.truncated);

  Trace zero = simulate_sequence(sc, make_sequence({1}), 0);
  EXPECT_EQ(zero.steps(), 0u);
  EXPECT_FALSE(zero.truncated);
  EXPECT_THROW(simulate_sequence(sc, {}, -1), InputError);
}

TEST(SimulateSequence, StopsWhenEverythingIsAbsorbed) {
  Scenario sc = scenarios::example4();
  Trace trace = simulate_sequence(sc, make_sequence({1, 2, 2, 2, 2}), 100);
  EXPECT_EQ(trace.steps(), 2u);
}

TEST(Reward, WeightedSumOfRepaired) {
  Scenario sc = scenarios::example4();
  Trace trace = simulate_sequence(sc, make_sequence({1, 2}), 10);
  RewardReport r = reward(sc, trace);
  EXPECT_EQ(r.repaired_set, (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(r.reward, Rational(4));
}

TEST(Reward, ZeroWhenAllFail) {
  Scenario sc = scenarios::from_text({{"0.1", "3", "0.1", "0.5"}, {"0.1", "2", "0.1", "0.5"}});
  Trace trace = simulate_sequence(sc, make_sequence({1}), 10);
  EXPECT_TRUE(reward(sc, trace).repaired_set.empty());
  EXPECT_EQ(reward(sc, trace).reward, Rational(0));
}

TEST(Reward, WeightedTwoNodeExample) {
  Scenario sc = scenarios::example3();
  Trace healthiest = simulate_policy(sc, policy::HealthiestFirst{}, 100);
  EXPECT_EQ(reward(sc, healthiest).reward, Rational(1));
  Trace second_first = simulate_sequence(sc, expand_order(sc, std::vector<NodeId>{2}), 100);
  EXPECT_EQ(reward(sc, second_first).reward, Rational(2));
}

TEST(ModifiedHealth, Values) {
  Scenario sc = scenarios::example4();
  SystemState s = SystemState::initial(sc);
  EXPECT_EQ(modified_health(s, sc, 1), -R("0.1"));
  Scenario still = scenarios::from_text({{"0.4", "1", "0.1", "0"}, {"0.5", "1", "0.1", "0.3"}});
  EXPECT_EQ(modified_health(SystemState::initial(still), still, 1), R("0.4"));
  SystemState repaired = SystemState::initial(still);
  repaired.healths[1] = Rational(1);
  repaired.statuses[1] = NodeStatus::Repaired;
  EXPECT_EQ(modified_health(repaired, still, 2), R("0.7"));
}

TEST(Jumps, DetectsSwitchBeforeRepair) {
  Scenario sc = scenarios::example5();
  Trace jumping = simulate_sequence(sc, make_sequence({1, 1, 2, 1}), 10);
  EXPECT_EQ(jump_times(jumping), (std::vector<std::int64_t>{2, 3}));
  EXPECT_FALSE(is_non_jumping(jumping));
  std::vector<NodeId> order{1, 2};
  EXPECT_TRUE(is_non_jumping(simulate_sequence(sc, expand_order(sc, order), 1000)));
}

TEST(Jumps, SwitchAfterRepairIsNotAJump) {
  Scenario sc = scenarios::example4();
  Trace t = simulate_sequence(sc, make_sequence({1, 2}), 10);
  EXPECT_TRUE(is_non_jumping(t));
}

TEST(Validated, RejectsInconsistentStates) {
  Scenario sc = scenarios::example4();
  SystemState s = SystemState::initial(sc);
  s.statuses[0] = NodeStatus::Repaired;
  EXPECT_THROW(validated(s, sc), InputError);
  SystemState short_state = SystemState::initial(sc);
  short_state.healths.pop_back();
  EXPECT_THROW(validated(short_state, sc), InputError);
}

TEST(DefaultHorizon, TenTimesRepairSpan) {
  EXPECT_EQ(default_horizon(scenarios::example5()), 10 * 3 * 40);
  Scenario idle = scenarios::from_text({{"0.4", "1", "0", "0.1"}, {"0.5", "1", "0.1", "0.3"}});
  EXPECT_EQ(default_horizon(idle), 10000);
}

TEST(Status, TextRoundTrip) {
  for (auto s : {NodeStatus::Active, NodeStatus::Repaired, NodeStatus::Failed})
    EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_THROW(parse_status("broken"), InputError);
}

}  // namespace
}  // namespace recov
