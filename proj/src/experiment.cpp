#include "recov/experiment.hpp"

#include <string>
#include <vector>

#include "recov/policies.hpp"

namespace recov {

Baseline parse_baseline(std::string_view name) {
  if (name == "random") return Baseline::Random;
  if (name == "random-nonjumping") return Baseline::RandomNonJumping;
  throw InputError("unknown baseline '" + std::string(name) + "'");
}

std::string_view baseline_name(Baseline baseline) {
  return baseline == Baseline::Random ? "random" : "random-nonjumping";
}

double Histogram::mean() const {
  if (samples == 0) return 0.0;
  double total = 0.0;
  for (const auto& [count, freq] : counts) total += static_cast<double>(count * freq);
  return total / static_cast<double>(samples);
}

std::int64_t Histogram::mode() const {
  std::int64_t best = 0;
  std::int64_t best_freq = -1;
  for (const auto& [count, freq] : counts) {
    if (freq > best_freq) {
      best = count;
      best_freq = freq;
    }
  }
  return best;
}

namespace {

struct Sample {
  std::int64_t repaired = 0;
  bool truncated = false;
};

Sample run_sample(const Scenario& scenario, Baseline baseline, std::uint64_t seed,
                  std::int64_t index, std::int64_t horizon) {
  const std::uint64_t stream = Rng::stream_seed(seed, static_cast<std::uint64_t>(index));
  PolicyKind kind = baseline == Baseline::Random ? PolicyKind(policy::RandomAny{stream})
                                                 : PolicyKind(policy::RandomNonJumping{stream});
  Trace trace = simulate_policy(scenario, kind, horizon);
  return Sample{static_cast<std::int64_t>(reward(scenario, trace).repaired_set.size()), trace.truncated};
}

Histogram collect(const std::vector<Sample>& results) {
  Histogram h;
  h.samples = static_cast<std::int64_t>(results.size());
  for (const auto& s : results) {
    ++h.counts[s.repaired];
    if (s.truncated) ++h.truncated;
  }
  return h;
}

void check_args(std::int64_t samples, std::int64_t horizon) {
  if (samples < 1) throw InputError("sample count must be positive");
  if (horizon < 0) throw InputError("horizon must be nonnegative");
}

}  // namespace

Histogram run_baseline_experiment(const Scenario& scenario, Baseline baseline, std::int64_t samples,
                                  std::uint64_t seed, std::int64_t horizon) {
  check_args(samples, horizon);
  std::vector<Sample> results(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < samples; ++i)
    results[static_cast<std::size_t>(i)] = run_sample(scenario, baseline, seed, i, horizon);
  return collect(results);
}

Histogram run_baseline_experiment_serial(const Scenario& scenario, Baseline baseline,
                                         std::int64_t samples, std::uint64_t seed,
                                         std::int64_t horizon) {
  check_args(samples, horizon);
  std::vector<Sample> results;
  for (std::int64_t i = 0; i < samples; ++i)
    results.push_back(run_sample(scenario, baseline, seed, i, horizon));
  return collect(results);
}

}  // namespace recov
