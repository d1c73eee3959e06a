// Batch driver: samples random deployments, schedules them with TRASA and
// writes one CSV row per run plus a mean row per node count.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trasa/conflict.hpp"
#include "trasa/experiment.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitSampling = 2;
constexpr int kExitIo = 3;

trasa::Area parse_area(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw trasa::ConfigError("--area expects <w>x<h>, got '" + text + "'");
  }
  try {
    std::size_t used_w = 0, used_h = 0;
    const std::string w = text.substr(0, x), h = text.substr(x + 1);
    trasa::Area area{std::stod(w, &used_w), std::stod(h, &used_h)};
    if (used_w != w.size() || used_h != h.size()) throw std::invalid_argument(text);
    return area;
  } catch (const std::logic_error&) {
    throw trasa::ConfigError("--area expects <w>x<h>, got '" + text + "'");
  }
}

// `<int>` for a uniform rate, or `@path` naming a file of `<node_id> <rate>`
// lines; nodes not listed keep rate 1.
void apply_rate(trasa::ExperimentConfig& config, const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    const std::string path = text.substr(1);
    std::ifstream in(path);
    if (!in) throw trasa::ConfigError("cannot read rate file " + path);
    config.rate = 1;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#') continue;
      std::istringstream row(line);
      long long node = -1, rate = -1;
      if (!(row >> node >> rate) || node < 0 || rate < 0) {
        throw trasa::ConfigError("bad rate line: " + line);
      }
      config.rate_overrides[static_cast<trasa::NodeId>(node)] =
          static_cast<std::uint32_t>(rate);
    }
    return;
  }
  try {
    std::size_t used = 0;
    const long long rate = std::stoll(text, &used);
    if (used != text.size() || rate <= 0) throw std::invalid_argument(text);
    config.rate = static_cast<std::uint32_t>(rate);
  } catch (const std::logic_error&) {
    throw trasa::ConfigError("--rate expects a positive integer or @file");
  }
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw trasa::OutputError("cannot open " + path + " for writing");
  writer(out);
  out.flush();
  if (!out) throw trasa::OutputError("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traffic-aware TDMA slot assignment experiments"};
  // -h would clash with the --h option.
  app.set_help_flag("--help", "Print this help message and exit");

  trasa::ExperimentConfig config;
  std::string area_text = "1x1";
  std::string rate_text = "1";
  unsigned heuristic = 1;
  std::string variant = "all";
  std::string out_path, dump_tree, dump_schedule, dump_graph, graph_path;

  app.add_option("--nodes", config.n_values, "Node counts, comma separated")
      ->delimiter(',');
  app.add_option("--area", area_text, "Deployment area <w>x<h> in meters");
  app.add_option("--range", config.range, "Transmission range R");
  app.add_option("--h", config.h, "Interference radius in hops");
  app.add_option("--max-children", config.max_children, "Tree degree bound");
  app.add_option("--heuristic", heuristic, "1: most descendants first, 2: fewest");
  app.add_option("--variant", variant, "Interfering links: all | tree");
  app.add_option("--rate", rate_text, "Packets per node per cycle, or @file");
  app.add_option("--runs", config.runs, "Repetitions per node count");
  app.add_option("--seed", config.base_seed, "Base seed");
  app.add_option("--out", out_path, "CSV destination (stdout when omitted)");
  app.add_option("--dump-tree", dump_tree, "Write the first instance's tree");
  app.add_option("--dump-schedule", dump_schedule, "Write the first instance's schedule");
  app.add_option("--dump-graph", dump_graph, "Write the first instance's graph");
  app.add_option("--graph", graph_path, "Schedule this graph file instead of sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    config.area = parse_area(area_text);
    apply_rate(config, rate_text);
    if (heuristic != 1 && heuristic != 2) throw trasa::ConfigError("--heuristic must be 1 or 2");
    config.heuristic = static_cast<trasa::Heuristic>(heuristic);
    if (variant == "all") {
      config.variant = trasa::InterferenceVariant::kAllLinks;
    } else if (variant == "tree") {
      config.variant = trasa::InterferenceVariant::kTreeOnly;
    } else {
      throw trasa::ConfigError("--variant must be 'all' or 'tree'");
    }

    std::optional<trasa::Instance> first;
    trasa::ResultTable table;
    if (!graph_path.empty()) {
      std::ifstream in(graph_path);
      if (!in) throw trasa::ConfigError("cannot read graph file " + graph_path);
      trasa::NetworkGraph graph = trasa::read_graph(in);
      const std::uint64_t graph_seed = graph.seed();
      config.n_values = {graph.size()};
      config.runs = 1;
      config.area = graph.area();
      config.range = graph.range();
      config.validate();
      trasa::SpanningTree tree = trasa::build_spanning_tree(graph, config.max_children)
                                     .with_rates(trasa::config_rates(config, graph.size()));
      first.emplace(trasa::Instance{std::move(graph), std::move(tree), graph_seed});
      table.config = config;
      table.rows.push_back(trasa::evaluate_instance(config, *first, 0));
      trasa::RunRow mean = table.rows.front();
      mean.run_index = -1;
      mean.seed = config.base_seed;
      table.rows.push_back(mean);
    } else {
      table = trasa::run_experiment(config);
      if (!dump_tree.empty() || !dump_schedule.empty() || !dump_graph.empty()) {
        first.emplace(trasa::sample_instance(config, config.n_values.front(), 0));
      }
    }

    if (first) {
      if (!dump_graph.empty()) {
        write_file(dump_graph, [&](std::ostream& o) { trasa::write_graph(o, first->graph); });
      }
      if (!dump_tree.empty()) {
        write_file(dump_tree, [&](std::ostream& o) { trasa::write_tree(o, first->tree); });
      }
      if (!dump_schedule.empty()) {
        const auto conflicts =
            trasa::build_conflict_map(first->graph, first->tree, config.variant, config.h);
        const auto schedule = trasa::run_trasa(first->tree, conflicts, config.heuristic);
        write_file(dump_schedule,
                   [&](std::ostream& o) { trasa::write_schedule(o, schedule); });
      }
    }

    if (out_path.empty()) {
      trasa::write_csv(std::cout, table);
      if (!std::cout) throw trasa::OutputError("failed writing to stdout");
    } else {
      trasa::emit_csv(table, out_path);
    }
  } catch (const trasa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const trasa::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const trasa::DisconnectedError& e) {
    std::cerr << "sampling failure: " << e.what() << '\n';
    return kExitSampling;
  } catch (const trasa::InfeasibleError& e) {
    std::cerr << "sampling failure: " << e.what() << '\n';
    return kExitSampling;
  } catch (const trasa::CannotSample& e) {
    std::cerr << "sampling failure: " << e.what() << '\n';
    return kExitSampling;
  } catch (const trasa::OutputError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return EXIT_SUCCESS;
}
