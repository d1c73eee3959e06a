#include "trasa/experiment.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "trasa/conflict.hpp"

namespace trasa {

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw ConfigError("no node counts given");
  for (auto n : n_values) {
    if (n < 2) throw ConfigError("node counts must be at least 2");
  }
  if (!(area.width > 0.0) || !(area.height > 0.0)) {
    throw ConfigError("area dimensions must be positive");
  }
  if (!(range > 0.0)) throw ConfigError("range must be positive");
  if (h == 0) throw ConfigError("h must be positive");
  if (max_children == 0) throw ConfigError("max_children must be positive");
  if (rate == 0) throw ConfigError("rate must be positive");
  if (runs == 0) throw ConfigError("runs must be at least 1");
  for (const auto& [node, r] : rate_overrides) {
    if (node == 0) throw ConfigError("the sink (node 0) cannot carry a rate");
    if (r == 0) throw ConfigError("rate overrides must be positive");
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n,
                          std::uint64_t run_index, std::uint64_t attempt) {
  std::uint64_t s = splitmix64(base_seed);
  s = splitmix64(s ^ n);
  s = splitmix64(s ^ run_index);
  return splitmix64(s ^ attempt);
}

std::vector<std::uint32_t> config_rates(const ExperimentConfig& config, std::size_t n) {
  std::vector<std::uint32_t> rates(n, config.rate);
  rates[0] = 0;
  for (const auto& [node, r] : config.rate_overrides) {
    if (node < n) rates[node] = r;
  }
  return rates;
}

Instance sample_instance(const ExperimentConfig& config, std::size_t n,
                         std::size_t run_index) {
  for (std::size_t attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    const std::uint64_t seed = derive_seed(config.base_seed, n, run_index, attempt);
    NetworkGraph graph = generate_random_graph(n, config.area, config.range, seed);
    if (!is_connected(graph)) continue;
    try {
      SpanningTree tree = build_spanning_tree(graph, config.max_children)
                              .with_rates(config_rates(config, n));
      return Instance{std::move(graph), std::move(tree), seed};
    } catch (const InfeasibleError&) {
      continue;
    }
  }
  throw CannotSample("no connected, spannable topology for n=" + std::to_string(n) +
                     " after " + std::to_string(kMaxSampleAttempts) + " attempts");
}

RunRow evaluate_instance(const ExperimentConfig& config, const Instance& instance,
                         std::size_t run_index) {
  const ConflictMap conflicts =
      build_conflict_map(instance.graph, instance.tree, config.variant, config.h);
  const Schedule schedule = run_trasa(instance.tree, conflicts, config.heuristic);
  const Metrics m =
      compute_metrics(replay_schedule(schedule, instance.tree), schedule, instance.tree);
  const SlotBounds bounds = theorem1_bounds(instance.tree);

  RunRow row;
  row.n = instance.graph.size();
  row.run_index = static_cast<long long>(run_index);
  row.seed = instance.seed;
  row.cycle_length = static_cast<double>(m.cycle_length);
  row.lower_bound = static_cast<double>(bounds.lower);
  row.upper_bound = static_cast<double>(bounds.upper);
  row.slot_reuse = m.slot_reuse;
  row.avg_delay = m.avg_delay;
  row.max_buffer = m.max_buffer;
  row.total_switches = static_cast<double>(m.total_switches);
  return row;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  ResultTable table{config, {}};
  for (std::size_t n : config.n_values) {
    RunRow mean;
    mean.n = n;
    mean.run_index = -1;
    mean.seed = config.base_seed;
    for (std::size_t run = 0; run < config.runs; ++run) {
      const RunRow row = evaluate_instance(config, sample_instance(config, n, run), run);
      mean.cycle_length += row.cycle_length;
      mean.lower_bound += row.lower_bound;
      mean.upper_bound += row.upper_bound;
      mean.slot_reuse += row.slot_reuse;
      mean.avg_delay += row.avg_delay;
      mean.max_buffer += row.max_buffer;
      mean.total_switches += row.total_switches;
      table.rows.push_back(row);
    }
    const double k = static_cast<double>(config.runs);
    mean.cycle_length /= k;
    mean.lower_bound /= k;
    mean.upper_bound /= k;
    mean.slot_reuse /= k;
    mean.avg_delay /= k;
    mean.max_buffer /= k;
    mean.total_switches /= k;
    table.rows.push_back(mean);
  }
  return table;
}

std::vector<const RunRow*> ResultTable::means() const {
  std::vector<const RunRow*> out;
  for (const auto& row : rows) {
    if (row.is_mean()) out.push_back(&row);
  }
  return out;
}

std::vector<const RunRow*> ResultTable::runs_for(std::size_t n) const {
  std::vector<const RunRow*> out;
  for (const auto& row : rows) {
    if (!row.is_mean() && row.n == n) out.push_back(&row);
  }
  return out;
}

namespace {

void put_count(std::ostream& out, const RunRow& row, double value) {
  if (row.is_mean()) {
    out << std::fixed << std::setprecision(6) << value;
  } else {
    out << std::llround(value);
  }
}

}  // namespace

void write_csv(std::ostream& out, const ResultTable& table) {
  const ExperimentConfig& c = table.config;
  const std::string rate =
      c.rate_overrides.empty() ? std::to_string(c.rate) : std::string("custom");
  out << kCsvHeader << '\n';
  for (const RunRow& row : table.rows) {
    out << row.n << ',' << row.run_index << ',' << row.seed << ','
        << to_string(c.heuristic) << ',' << to_string(c.variant) << ',' << c.h << ','
        << c.max_children << ',' << rate << ',';
    put_count(out, row, row.cycle_length);
    out << ',';
    put_count(out, row, row.lower_bound);
    out << ',';
    put_count(out, row, row.upper_bound);
    out << ',' << std::fixed << std::setprecision(6) << row.slot_reuse << ','
        << row.avg_delay << ',';
    put_count(out, row, row.max_buffer);
    out << ',';
    put_count(out, row, row.total_switches);
    out << '\n';
  }
}

void emit_csv(const ResultTable& table, const std::string& path) {
  if (table.rows.empty()) {
    throw OutputError("refusing to write an empty table");
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw OutputError("cannot open " + path + " for writing");
  }
  write_csv(file, table);
  file.flush();
  if (!file) {
    throw OutputError("failed writing " + path);
  }
}

}  // namespace trasa
