#include <sys/resource.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tclique/generator.hpp"
#include "tclique/oracle.hpp"
#include "tclique/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitOracleMismatch = 3;

// A clique as printed: original node names in lexicographic order plus the
// interval. Also the sort key for diff-stable output.
struct OutputLine {
  std::vector<std::string> names;
  tclique::Timestamp t_b;
  tclique::Timestamp t_e;

  bool operator<(const OutputLine& o) const {
    return std::tie(t_b, t_e, names) < std::tie(o.t_b, o.t_e, o.names);
  }
  bool operator==(const OutputLine& o) const = default;
};

std::vector<OutputLine> to_lines(const tclique::TemporalNetwork& net,
                                 const std::vector<tclique::CliqueRecord>& cliques) {
  std::vector<OutputLine> lines;
  lines.reserve(cliques.size());
  for (const auto& c : cliques) {
    OutputLine line;
    for (tclique::NodeId u : c.nodes) line.names.push_back(net.name(u));
    std::sort(line.names.begin(), line.names.end());
    line.t_b = c.t_b;
    line.t_e = c.t_e;
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

void write_lines(std::ostream& out, const std::vector<OutputLine>& lines, bool jsonl) {
  for (const auto& line : lines) {
    if (jsonl) {
      nlohmann::json obj;
      obj["nodes"] = line.names;
      obj["t_b"] = line.t_b;
      obj["t_e"] = line.t_e;
      out << obj.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < line.names.size(); ++i)
        out << (i ? "," : "") << line.names[i];
      out << '\t' << line.t_b << '\t' << line.t_e << '\n';
    }
  }
}

long peak_rss_kib() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
  return usage.ru_maxrss;  // KiB on Linux
}

bool parse_generate_tokens(const std::vector<std::string>& tokens,
                           tclique::GeneratorParams& params, std::string& error) {
  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      error = "--generate token '" + tok + "' is not key=value";
      return false;
    }
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    try {
      if (key == "nodes")
        params.nodes = std::stoul(val);
      else if (key == "instances")
        params.instances = std::stoul(val);
      else if (key == "seed")
        params.seed = std::stoull(val);
      else if (key == "tmax")
        params.t_max = std::stoll(val);
      else if (key == "wmin")
        params.weight_min = std::stod(val);
      else if (key == "wmax")
        params.weight_max = std::stod(val);
      else {
        error = "--generate: unknown key '" + key + "'";
        return false;
      }
    } catch (const std::exception&) {
      error = "--generate: bad value in '" + tok + "'";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enumerates all maximal cliques of a weighted temporal network, where a\n"
      "clique is a node set whose every pair accumulates at least --gamma edge\n"
      "weight within every window of --delta time units across the clique's\n"
      "interval. Reported duration D is t_e - t_b."};

  std::string input_path;
  std::vector<std::string> generate_tokens;
  long long delta = 0;
  double gamma = 1.0;
  std::string columns = "uvt";
  std::string output_path;
  std::string format = "tsv";
  bool no_prune = false;
  bool oracle_validate = false;
  std::string stats_path;
  std::optional<std::uint64_t> seed;

  auto* input_opt = app.add_option("--input", input_path, "Edge instance file to read");
  auto* gen_opt = app.add_option("--generate", generate_tokens,
                                 "Generate a random network instead of reading one; "
                                 "key=value tokens: nodes, instances, seed, tmax, wmin, wmax")
                      ->expected(0, -1);
  input_opt->excludes(gen_opt);
  app.add_option("--delta", delta, "Window length (positive integer)")->required();
  app.add_option("--gamma", gamma, "Minimum per-window weight (default 1)");
  app.add_option("--columns", columns, "Input column order")
      ->check(CLI::IsMember({"uvt", "uvtw", "tuv", "tuvw"}));
  app.add_option("--output", output_path, "Clique output path (default standard output)");
  app.add_option("--format", format, "Clique output format")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  app.add_flag("--no-prune", no_prune, "Disable branch pruning (slower, same output)");
  app.add_flag("--oracle-validate", oracle_validate,
               "Cross-check the output against exhaustive enumeration (small inputs only)");
  app.add_option("--stats", stats_path, "Statistics JSON path (default standard error)");
  app.add_option("--seed", seed, "Random seed (overrides the generate token)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (delta < 1) {
    std::cerr << "error: --delta must be >= 1\n";
    return kExitUsage;
  }
  if (input_path.empty() && gen_opt->count() == 0) {
    std::cerr << "error: either --input or --generate is required\n";
    return kExitUsage;
  }

  tclique::TemporalNetwork net;
  try {
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return kExitIo;
      }
      tclique::IngestOptions opts;
      if (columns == "uvt") opts.columns = tclique::ColumnOrder::uvt;
      if (columns == "uvtw") opts.columns = tclique::ColumnOrder::uvtw;
      if (columns == "tuv") opts.columns = tclique::ColumnOrder::tuv;
      if (columns == "tuvw") opts.columns = tclique::ColumnOrder::tuvw;
      net = tclique::ingest(in, opts);
    } else {
      tclique::GeneratorParams params;
      std::string error;
      if (!parse_generate_tokens(generate_tokens, params, error)) {
        std::cerr << "error: " << error << '\n';
        return kExitUsage;
      }
      if (seed) params.seed = *seed;
      net = tclique::generate_network(params);
    }
  } catch (const tclique::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto result = tclique::run_pipeline(net, delta, gamma, !no_prune);
  auto lines = to_lines(net, result.sink.cliques());

  if (oracle_validate) {
    std::vector<tclique::CliqueRecord> expected;
    try {
      expected = tclique::oracle_enumerate(net, delta, gamma);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    auto expected_lines = to_lines(net, expected);
    if (expected_lines != lines) {
      std::cerr << "oracle mismatch: pipeline produced " << lines.size()
                << " cliques, exhaustive enumeration produced " << expected_lines.size() << '\n';
      return kExitOracleMismatch;
    }
  }

  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return kExitIo;
    }
    write_lines(out, lines, format == "jsonl");
  } else {
    write_lines(std::cout, lines, format == "jsonl");
  }

  nlohmann::json stats;
  stats["N"] = result.sink.count();
  stats["C"] = result.sink.max_cardinality();
  stats["D"] = result.sink.max_duration();
  stats["stretch_seconds"] = result.stretch_seconds;
  stats["bulk_seconds"] = result.bulk_seconds;
  stats["seed_records"] = result.seed_count;
  stats["visited_states"] = result.bulk_stats.visited_states;
  stats["pruned_branches"] = result.bulk_stats.pruned_branches;
  stats["stretch_fallback_edges"] = result.stretch_stats.fallback_engaged;
  stats["peak_rss_kib"] = peak_rss_kib();
  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) {
      std::cerr << "error: cannot write '" << stats_path << "'\n";
      return kExitIo;
    }
    out << stats.dump(2) << '\n';
  } else {
    std::cerr << stats.dump(2) << '\n';
  }
  return kExitOk;
}
