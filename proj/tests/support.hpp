// Test-only generators and independent oracles. The oracles work on integer
// numerators over a common denominator so they share no arithmetic with the
// library's Rational type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "recov/model.hpp"

namespace testing_support {

using recov::NodeId;

struct IntNode {
  std::int64_t v0, w, inc, dec;  // v0, inc, dec in units of 1/den; w whole
};

struct IntScenario {
  std::int64_t den = 100;
  std::vector<IntNode> nodes;

  recov::Scenario build() const {
    std::vector<recov::NodeSpec> specs;
    NodeId id = 1;
    for (const auto& n : nodes)
      specs.push_back(recov::NodeSpec{id++, recov::Health(recov::Rational(n.v0, den)),
                                      recov::Weight(recov::Rational(n.w)),
                                      recov::Rate(recov::Rational(n.inc, den)),
                                      recov::Rate(recov::Rational(n.dec, den))});
    return recov::Scenario(std::move(specs));
  }
  std::size_t size() const { return nodes.size(); }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---- oracle simulation -------------------------------------------------

struct OracleRun {
  std::vector<std::vector<std::int64_t>> healths;  // one row per t, scaled by den
  std::vector<std::int64_t> repaired_at;           // -1 when never
  std::vector<std::int64_t> failed_at;
  std::int64_t reward = 0;
  std::size_t repaired_count() const {
    return static_cast<std::size_t>(std::count_if(repaired_at.begin(), repaired_at.end(),
                                                  [](std::int64_t t) { return t >= 0; }));
  }
};

inline bool alive(std::int64_t v, std::int64_t den) { return v > 0 && v < den; }

// Applies actions while some node is alive.
inline OracleRun oracle_simulate(const IntScenario& sc, const std::vector<NodeId>& actions) {
  const std::size_t n = sc.size();
  OracleRun run;
  std::vector<std::int64_t> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = sc.nodes[j].v0;
  run.healths.push_back(v);
  run.repaired_at.assign(n, -1);
  run.failed_at.assign(n, -1);
  std::int64_t t = 0;
  for (NodeId a : actions) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) any = any || alive(v[j], sc.den);
    if (!any) break;
    ++t;
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive(v[j], sc.den)) continue;
      if (static_cast<NodeId>(j + 1) == a) {
        v[j] = std::min(sc.den, v[j] + sc.nodes[j].inc);
        if (v[j] == sc.den) run.repaired_at[j] = t;
      } else {
        v[j] = std::max<std::int64_t>(0, v[j] - sc.nodes[j].dec);
        if (v[j] == 0) run.failed_at[j] = t;
      }
    }
    run.healths.push_back(v);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (run.repaired_at[j] >= 0) run.reward += sc.nodes[j].w;
  return run;
}

// Targets each listed node until it leaves (0,1), skipping dead ones.
inline std::vector<NodeId> oracle_expand(const IntScenario& sc, const std::vector<NodeId>& order) {
  std::vector<std::int64_t> v;
  for (const auto& n : sc.nodes) v.push_back(n.v0);
  std::vector<NodeId> actions;
  for (NodeId id : order) {
    while (alive(v[static_cast<std::size_t>(id - 1)], sc.den)) {
      actions.push_back(id);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!alive(v[j], sc.den)) continue;
        if (static_cast<NodeId>(j + 1) == id)
          v[j] = std::min(sc.den, v[j] + sc.nodes[j].inc);
        else
          v[j] = std::max<std::int64_t>(0, v[j] - sc.nodes[j].dec);
      }
    }
  }
  return actions;
}

// Best reward over every action sequence of length <= depth (plain DFS).
inline std::int64_t oracle_best_reward(const IntScenario& sc, int depth) {
  std::int64_t best = 0;
  std::vector<NodeId> seq;
  std::function<void()> rec = [&] {
    best = std::max(best, oracle_simulate(sc, seq).reward);
    if (static_cast<int>(seq.size()) == depth) return;
    for (std::size_t j = 1; j <= sc.size(); ++j) {
      seq.push_back(static_cast<NodeId>(j));
      rec();
      seq.pop_back();
    }
  };
  rec();
  return best;
}

// Largest z such that some z distinct nodes admit an order with
// v0 > (z - r) * dec at every position r = 1..z.
inline std::int64_t oracle_max_survivors(const IntScenario& sc) {
  const std::size_t n = sc.size();
  for (std::size_t z = n; z >= 1; --z) {
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(z), pick.end(), 1);
    do {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < n; ++j)
        if (pick[j]) members.push_back(j);
      do {
        bool ok = true;
        for (std::size_t r = 1; r <= z && ok; ++r) {
          const IntNode& node = sc.nodes[members[r - 1]];
          ok = node.v0 > static_cast<std::int64_t>(z - r) * node.dec;
        }
        if (ok) return static_cast<std::int64_t>(z);
      } while (std::next_permutation(members.begin(), members.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

// ---- generators ---------------------------------------------------------

// Random rates and weights; every inc >= den / 10 so brute-force horizons stay small.
inline IntScenario random_scenario(Gen& g, std::size_t n, std::int64_t den = 20) {
  IntScenario sc;
  sc.den = den;
  for (std::size_t j = 0; j < n; ++j)
    sc.nodes.push_back(IntNode{g.uniform(1, den - 1), g.uniform(1, 5), g.uniform(den / 10, den),
                               g.uniform(0, den)});
  return sc;
}

// dec_j >= inc_j > 0 for every node.
inline IntScenario random_dec_ge_inc(Gen& g, std::size_t n, std::int64_t den = 20) {
  IntScenario sc;
  sc.den = den;
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t inc = g.uniform(std::max<std::int64_t>(1, den / 10), den / 2);
    sc.nodes.push_back(IntNode{g.uniform(1, den - 1), g.uniform(1, 5), inc, g.uniform(inc, den)});
  }
  return sc;
}

// Homogeneous rates and weights, dec = k inc, 1 - v0 = m_j inc.
inline IntScenario random_integer_ratio(Gen& g, std::size_t n, std::int64_t den = 20) {
  IntScenario sc;
  sc.den = den;
  std::int64_t inc = g.uniform(std::max<std::int64_t>(1, den / 10), den / 3);
  std::int64_t k = g.uniform(1, std::max<std::int64_t>(1, den / inc));
  std::int64_t dec = std::min(den, k * inc);
  if (dec % inc != 0) dec = inc;
  std::int64_t w = g.uniform(1, 5);
  std::int64_t max_m = (den - 1) / inc;
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t m = g.uniform(1, max_m);
    sc.nodes.push_back(IntNode{den - m * inc, w, inc, dec});
  }
  return sc;
}

}  // namespace testing_support

namespace testing_support {

// Random heterogeneous instance whose regime resolves to the target-set policy.
inline IntScenario random_target_set_regime(Gen& g, std::size_t n, bool (*accept)(const recov::Scenario&)) {
  while (true) {
    IntScenario sc = random_scenario(g, n, 20);
    for (auto& node : sc.nodes) node.dec = g.uniform(0, 8);
    if (accept(sc.build())) return sc;
  }
}

}  // namespace testing_support
