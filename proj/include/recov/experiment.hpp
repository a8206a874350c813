#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "recov/model.hpp"

namespace recov {

enum class Baseline { Random, RandomNonJumping };

Baseline parse_baseline(std::string_view name);
std::string_view baseline_name(Baseline baseline);

// Frequencies of the number of repaired nodes per sample.
struct Histogram {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t samples = 0;
  std::int64_t truncated = 0;  // samples stopped by the horizon guard

  double mean() const;
  // Most frequent count; ties go to the smallest count.
  std::int64_t mode() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Sample i draws from the stream Rng::stream_seed(seed, i), so the result
// does not depend on how samples are scheduled across threads.
Histogram run_baseline_experiment(const Scenario& scenario, Baseline baseline, std::int64_t samples,
                                  std::uint64_t seed, std::int64_t horizon);
Histogram run_baseline_experiment_serial(const Scenario& scenario, Baseline baseline,
                                         std::int64_t samples, std::uint64_t seed,
                                         std::int64_t horizon);

}  // namespace recov
