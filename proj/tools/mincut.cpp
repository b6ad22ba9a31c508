// Command-line front end: load a graph, run the pipeline, report value and stats.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mincut/oracle.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/stream.hpp"

namespace {

enum Exit { kOk = 0, kIo = 1, kParse = 2, kDisconnected = 3, kVerifyMismatch = 4, kBudget = 5 };

int exit_for(mincut::GraphErrorCode code) {
  switch (code) {
    case mincut::GraphErrorCode::kIo: return kIo;
    case mincut::GraphErrorCode::kDisconnected: return kDisconnected;
    default: return kParse;
  }
}

nlohmann::ordered_json weight_json(mincut::Weight w) {
  if (w >= 0 && w <= static_cast<mincut::Weight>(std::numeric_limits<std::uint64_t>::max())) {
    return static_cast<std::uint64_t>(w);
  }
  return mincut::to_string(w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted minimum cut via 2-respecting cuts of packed spanning trees"};
  std::string mode_name = "sequential", input, format = "edgelist", verify = "none", stats_path, dump_path;
  mincut::PipelineOptions options;
  bool report_partition = false, timing = false;
  app.add_option("--mode", mode_name, "sequential, cut-query or streaming")
      ->check(CLI::IsMember({"sequential", "cut-query", "streaming"}));
  app.add_option("--input", input, "graph file, '-' for stdin")->required();
  app.add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  app.add_option("--epsilon", options.epsilon, "proxy accuracy, in (0, 0.1]")->check(CLI::Range(1e-9, 0.1));
  app.add_option("--seed", options.seed, "64-bit seed");
  app.add_option("--churn", options.churn, "insert/delete pairs per edge in streaming mode")->check(CLI::NonNegativeNumber);
  app.add_option("--trees", options.trees, "trees per lambda guess (0: ceil(6 ln n))");
  app.add_option("--verify", verify, "none or oracle")->check(CLI::IsMember({"none", "oracle"}));
  app.add_option("--stats", stats_path, "write stats JSON here ('-' for stdout)");
  app.add_option("--budget", options.word_budget_factor, "stream space budget factor c, c*n*log2(n)^3 words (0: off)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--dump-stream", dump_path, "write the update stream (streaming mode)");
  app.add_flag("--report-partition", report_partition, "print the vertices on one side of the cut");
  app.add_flag("--timing", timing, "record wall time in the stats");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  options.mode = *mincut::parse_mode(mode_name);
  const auto fmt = format == "dimacs" ? mincut::InputFormat::kDimacs : mincut::InputFormat::kEdgeList;

  try {
    mincut::WeightedGraph g;
    if (input == "-") {
      const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      g = mincut::load_graph(text, fmt);
    } else {
      g = mincut::load_graph_file(input, fmt);
    }
    if (!dump_path.empty()) {
      std::ofstream out(dump_path);
      out << mincut::StreamHarness(g, options.churn, options.seed).dump();
      if (!out) throw mincut::GraphError(mincut::GraphErrorCode::kIo, "cannot write " + dump_path);
    }

    const auto result = mincut::min_cut_pipeline(g, options);
    std::cout << "value " << mincut::to_string(result.cut.value) << '\n';
    if (report_partition && result.cut.partition) {
      std::cout << "partition";
      for (std::size_t v = 0; v < result.cut.partition->size(); ++v) {
        if ((*result.cut.partition)[v]) std::cout << ' ' << v;
      }
      std::cout << '\n';
    }

    if (!stats_path.empty()) {
      nlohmann::ordered_json stats;
      stats["value"] = weight_json(result.cut.value);
      stats["queries"] = result.stats.queries;
      stats["passes"] = result.stats.passes;
      stats["tracked_words"] = result.stats.tracked_words;
      stats["probes"] = result.stats.probes;
      stats["wall_ms"] = timing ? result.stats.wall_ms : 0;
      stats["seed"] = options.seed;
      if (stats_path == "-") {
        std::cout << stats.dump() << '\n';
      } else {
        std::ofstream out(stats_path);
        out << stats.dump() << '\n';
        if (!out) throw mincut::GraphError(mincut::GraphErrorCode::kIo, "cannot write " + stats_path);
      }
    }

    if (verify == "oracle") {
      const auto want = mincut::oracle_min_cut(g).value;
      if (want != result.cut.value) {
        std::cerr << "verify: oracle value " << mincut::to_string(want) << " differs from "
                  << mincut::to_string(result.cut.value) << '\n';
        return kVerifyMismatch;
      }
    }
  } catch (const mincut::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const mincut::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  }
  return kOk;
}
