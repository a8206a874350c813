#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace recov::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kTruncated = 3, kSolverLimit = 4 };

// Explicit value, else RECOV_MAX_HORIZON, else `fallback`.
std::int64_t resolve_horizon(std::optional<std::int64_t> explicit_horizon, std::int64_t fallback);

struct SimulateOptions {
  std::filesystem::path scenario;
  std::optional<std::string> policy;
  std::optional<std::string> order;  // comma list, e.g. "1,3,2"
  std::optional<std::int64_t> horizon;
  std::optional<std::filesystem::path> trace;
  std::uint64_t seed = 0;
};

struct SolveOptions {
  std::filesystem::path scenario;
  std::string method = "auto";
  std::optional<std::filesystem::path> out;
  std::optional<std::int64_t> horizon;
  std::int64_t horizon_cap = 60;
  std::size_t node_cap = 4;
};

struct AnalyzeOptions {
  std::filesystem::path scenario;
};

struct ExperimentOptions {
  std::filesystem::path scenario;
  std::string baseline = "random";
  std::int64_t samples = 1000;
  std::uint64_t seed = 20190101;
  std::optional<std::filesystem::path> out;
  std::optional<std::int64_t> horizon;
};

struct ReproduceOptions {
  std::string which;  // "1", "2" or "tables"
  std::optional<std::filesystem::path> out_dir;
  std::uint64_t seed = 20190101;
};

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentOptions& opts, std::ostream& out, std::ostream& err);
int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace recov::cli
