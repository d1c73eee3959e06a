#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trasa/metrics.hpp"
#include "trasa/scheduler.hpp"
#include "trasa/topology.hpp"
#include "trasa/tree.hpp"

namespace trasa {

struct ExperimentConfig {
  std::vector<std::size_t> n_values{20, 40, 60, 80, 100};
  Area area{1.0, 1.0};
  double range = 0.4;
  unsigned h = 2;
  unsigned max_children = 3;
  Heuristic heuristic = Heuristic::kMostDescendantsFirst;
  InterferenceVariant variant = InterferenceVariant::kAllLinks;
  std::uint32_t rate = 1;
  /// Per-node rate overrides; nodes absent here use `rate`.
  std::map<NodeId, std::uint32_t> rate_overrides;
  std::size_t runs = 40;
  std::uint64_t base_seed = 1;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

inline constexpr std::size_t kMaxSampleAttempts = 10000;

/// splitmix64 finalizer chained over (base_seed, n, run_index, attempt).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n,
                          std::uint64_t run_index, std::uint64_t attempt);

/// One connected topology with its tree, after resampling.
struct Instance {
  NetworkGraph graph;
  SpanningTree tree;
  std::uint64_t seed;
};

/// Draws seeds for (n, run_index) until the graph is connected and the tree
/// builds; throws CannotSample after kMaxSampleAttempts tries.
Instance sample_instance(const ExperimentConfig& config, std::size_t n,
                         std::size_t run_index);

/// Tree rates from the config (uniform rate plus overrides).
std::vector<std::uint32_t> config_rates(const ExperimentConfig& config, std::size_t n);

/// One CSV row. Run rows hold integral values in the count columns; the
/// per-n mean row (run_index == -1, seed == base_seed) holds averages.
struct RunRow {
  std::size_t n = 0;
  long long run_index = 0;
  std::uint64_t seed = 0;
  double cycle_length = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double slot_reuse = 0.0;
  double avg_delay = 0.0;
  double max_buffer = 0.0;
  double total_switches = 0.0;

  bool is_mean() const { return run_index < 0; }
};

struct ResultTable {
  ExperimentConfig config;
  std::vector<RunRow> rows;

  /// Mean rows only (run_index == -1), in n order.
  std::vector<const RunRow*> means() const;
  std::vector<const RunRow*> runs_for(std::size_t n) const;
};

/// Schedules and replays one instance under the config.
RunRow evaluate_instance(const ExperimentConfig& config, const Instance& instance,
                         std::size_t run_index);

/// Every (n, run) point in n_values order, each followed by its mean row.
ResultTable run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "n,run_index,seed,heuristic,variant,h,max_children,rate,cycle_length,"
    "lower_bound,upper_bound,slot_reuse,avg_delay,max_buffer,total_switches";

void write_csv(std::ostream& out, const ResultTable& table);

/// Writes the CSV to `path`; throws OutputError on I/O failure.
void emit_csv(const ResultTable& table, const std::string& path);

}  // namespace trasa
