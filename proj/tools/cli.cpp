#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ejnet/export.hpp"
#include "ejnet/network.hpp"
#include "ejnet/oracle.hpp"
#include "ejnet/pathfind.hpp"

#ifndef EJNET_FIXTURE_DIR
#define EJNET_FIXTURE_DIR "data/fixtures"
#endif

namespace ejnet::cli {

using nlohmann::json;

namespace {

enum class Format { kText, kJson, kDot };

struct RunConfig {
  std::string command;
  std::vector<std::string> alphas;
  std::string from;
  std::string to;
  std::string out_path;
  std::string format;  // empty: the command's default
  bool lengths_only = false;
  unsigned threads = 1;
  std::size_t node_cap = kDefaultNodeCap;
  std::uint64_t path_budget = 0;
  unsigned repeat = 1;
  std::string fixtures;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureSpec {
  std::string file;
  std::int64_t a;
  std::int64_t b;
  std::string source;
  std::string target;
  std::size_t first_length;
};

std::optional<FixtureSpec> named_fixture(const std::string& name) {
  if (name == "table1") return FixtureSpec{"table1.txt", 2, 3, "r", "1", 1};
  return std::nullopt;
}

Format parse_format(const std::string& text, const char* fallback = "text");

Format parse_format(const std::string& text, const char* fallback) {
  if (text.empty()) return parse_format(fallback, fallback);
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  throw UsageError("unknown format '" + text + "'");
}

Generator single_alpha(const RunConfig& cfg) {
  if (cfg.alphas.size() != 1) throw UsageError("exactly one --alpha a,b is required");
  return parse_alpha(cfg.alphas.front());
}

NodeId resolve_node(const EJNetwork& net, const std::string& label, const char* flag) {
  if (label.empty()) throw UsageError(std::string(flag) + " LABEL is required");
  return net.index_of(parse_label(label));
}

// Writes to --out when given, otherwise to out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream(std::ostream& fallback) { return file_.is_open() ? file_ : fallback; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string join_profile(const std::vector<std::int64_t>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + "]";
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const Generator g = single_alpha(cfg);
  const EJNetwork net = EJNetwork::build(g);
  const DistanceProfile bfs = distance_profile(net);
  std::optional<DistanceProfile> formula;
  std::string formula_note;
  try {
    formula = distance_profile_formula(g);
  } catch (const FormulaGap& gap) {
    formula_note = gap.what();
  }
  const bool diameter_match = bfs.k == g.diameter();
  const bool profile_match = formula && *formula == bfs;
  const bool match = diameter_match && profile_match;

  if (parse_format(cfg.format) == Format::kJson) {
    json j{{"alpha", generator_to_json(g)},
           {"n", net.size()},
           {"diameter_formula", g.diameter()},
           {"diameter_bfs", bfs.k},
           {"profile_bfs", bfs.w},
           {"verdict", match ? "MATCH" : "MISMATCH"}};
    j["profile_formula"] = formula ? json(formula->w) : json(nullptr);
    if (!formula_note.empty()) j["formula_gap"] = formula_note;
    out << j.dump(2) << '\n';
  } else {
    out << "alpha: " << format_label(g.value()) << '\n'
        << "n: " << net.size() << '\n'
        << "diameter (formula): " << g.diameter() << '\n'
        << "diameter (bfs): " << bfs.k << '\n'
        << "profile (formula): " << (formula ? join_profile(formula->w) : "gap: " + formula_note) << '\n'
        << "profile (bfs): " << join_profile(bfs.w) << '\n'
        << "verdict: " << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitFalse;
}

int cmd_neighbors(const RunConfig& cfg, std::ostream& out) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  const NodeId v = resolve_node(net, cfg.from, "--from");
  if (parse_format(cfg.format) == Format::kJson) {
    json list = json::array();
    for (const NodeId w : net.neighbors(v)) list.push_back(node_to_json(net.node(w)));
    out << json{{"node", node_to_json(net.node(v))}, {"neighbors", list}}.dump(2) << '\n';
  } else {
    const auto row = net.neighbors(v);
    out << format_path(net, Path{{row.begin(), row.end()}}) << '\n';
  }
  return kExitOk;
}

int cmd_shortest_path(const RunConfig& cfg, std::ostream& out) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  const NodeId s = resolve_node(net, cfg.from, "--from");
  const NodeId d = resolve_node(net, cfg.to, "--to");
  if (s == d) throw UsageError("--from and --to name the same node");
  const Path path = shortest_path(net, s, d);
  if (parse_format(cfg.format) == Format::kJson) {
    json nodes = json::array();
    for (const NodeId v : path.nodes) nodes.push_back(node_to_json(net.node(v)));
    out << json{{"length", path.length()}, {"path", nodes}}.dump(2) << '\n';
  } else {
    out << path.length() << ": " << format_path(net, path) << '\n';
  }
  return kExitOk;
}

int cmd_panconnect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  const Format format = parse_format(cfg.format, "json");
  const bool include_paths = !cfg.lengths_only;
  const auto retention = include_paths ? PathRetention::kAll : PathRetention::kLengthsOnly;
  Sink sink(cfg.out_path);
  std::ostream& summary = sink.to_file() ? out : err;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  if (!cfg.from.empty() || !cfg.to.empty()) {
    const NodeId s = resolve_node(net, cfg.from, "--from");
    const NodeId d = resolve_node(net, cfg.to, "--to");
    if (s == d) throw UsageError("--from and --to name the same node");
    const ChainResult result = chain_algorithm(net, shortest_path(net, s, d), retention);
    if (const auto* failure = std::get_if<ChainFailure>(&result)) {
      sink.stream(out) << failure_to_json(net, *failure).dump() << '\n';
      summary << "FAILURE: stuck at length " << failure->stuck.length() << " (" << elapsed() << " s)\n";
      return kExitFalse;
    }
    const PanEntry& entry = std::get<PanEntry>(result);
    if (format == Format::kText) {
      for (const Path& p : entry.paths) sink.stream(out) << p.length() << ": " << format_path(net, p) << '\n';
      if (!include_paths) {
        for (const auto l : entry.lengths) sink.stream(out) << l << '\n';
      }
    } else {
      sink.stream(out) << pan_entry_to_json(net, entry, include_paths).dump() << '\n';
    }
    summary << entry.lengths.size() << " paths, lengths " << entry.lengths.front() << ".." << entry.lengths.back()
            << " (" << elapsed() << " s)\n";
    return kExitOk;
  }

  const SweepResult result = panconnectivity_list(net, {cfg.threads, retention});
  if (const auto* failure = std::get_if<ChainFailure>(&result)) {
    sink.stream(out) << failure_to_json(net, *failure).dump() << '\n';
    summary << "FAILURE at pair (" << format_compact(net.node(failure->source)) << ", "
            << format_compact(net.node(failure->target)) << "), stuck at length " << failure->stuck.length()
            << " (" << elapsed() << " s)\n";
    return kExitFalse;
  }
  const PanTable& table = std::get<PanTable>(result);
  if (format == Format::kText) {
    for (const PanEntry& e : table.entries) {
      sink.stream(out) << format_compact(net.node(e.source)) << " -> " << format_compact(net.node(e.target))
                       << ": " << e.lengths.front() << ".." << e.lengths.back() << '\n';
    }
  } else {
    write_pan_table_json(sink.stream(out), net, table, include_paths);
  }
  summary << "pairs: " << table.entries.size() << ", failures: 0, time: " << elapsed() << " s\n";
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  const CheckReport report = check_panconnectivity(net);
  if (parse_format(cfg.format) == Format::kJson) {
    out << check_report_to_json(net, report).dump(2) << '\n';
  } else {
    for (const auto& r : report.representatives) {
      out << "0 -> " << format_compact(net.node(r.node)) << " (distance " << r.hops << "): "
          << (r.success ? "ok" : "STUCK") << ", reached length " << r.reached_length << '\n';
    }
    out << (report.panconnected ? "PANCONNECTED" : "NOT PANCONNECTED") << " (" << report.representatives.size()
        << " representatives)\n";
  }
  return report.panconnected ? kExitOk : kExitFalse;
}

int cmd_pancycles(const RunConfig& cfg, std::ostream& out) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  const NodeId s = resolve_node(net, cfg.from, "--from");
  const NodeId d = resolve_node(net, cfg.to, "--to");
  std::vector<Cycle> cycles;
  try {
    cycles = pancycles(net, s, d);
  } catch (const NotAdjacent& e) {
    throw UsageError(e.what());
  }
  if (parse_format(cfg.format) == Format::kJson) {
    json list = json::array();
    for (const Cycle& c : cycles) {
      json nodes = json::array();
      for (const NodeId v : c.nodes) nodes.push_back(node_to_json(net.node(v)));
      list.push_back(json{{"length", c.length()}, {"nodes", nodes}});
    }
    out << json{{"alpha", generator_to_json(net.generator())}, {"cycles", list}}.dump() << '\n';
  } else {
    for (const Cycle& c : cycles) {
      Path closed{c.nodes};
      closed.nodes.push_back(c.nodes.front());
      out << c.length() << ": " << format_path(net, closed) << '\n';
    }
  }
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const EJNetwork net = EJNetwork::build(single_alpha(cfg));
  Sink sink(cfg.out_path);
  switch (parse_format(cfg.format, "json")) {
    case Format::kDot:
      sink.stream(out) << network_to_dot(net);
      break;
    case Format::kJson:
    case Format::kText:
      sink.stream(out) << network_to_json(net).dump() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.fixtures.empty() && cfg.alphas.empty()) throw UsageError("verify needs --fixtures NAME and/or --alpha a,b");
  const bool as_json = parse_format(cfg.format) == Format::kJson;
  json doc = json::object();
  bool all_ok = true;

  if (!cfg.fixtures.empty()) {
    const auto spec = named_fixture(cfg.fixtures);
    std::string file = spec ? fixture_dir() + "/" + spec->file : cfg.fixtures;
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open fixture '" + file + "'");
    const auto rows = read_path_fixture(in);
    const Generator g = spec ? Generator(spec->a, spec->b) : single_alpha(cfg);
    const EJNetwork net = EJNetwork::build(g);
    std::size_t valid = 0;
    json findings = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Path path = resolve_path(net, rows[i]);
      NodeId s = path.front();
      NodeId d = path.back();
      std::size_t length = path.length();
      if (spec) {
        s = net.index_of(parse_label(spec->source));
        d = net.index_of(parse_label(spec->target));
        length = spec->first_length + i;
      }
      if (validate_path(net, path, s, d, length)) {
        ++valid;
      } else {
        findings.push_back("row " + std::to_string(i + 1) + " (length " + std::to_string(length) + ") invalid");
      }
    }
    const bool ok = valid == rows.size() && !rows.empty();
    all_ok = all_ok && ok;
    if (as_json) {
      doc["fixtures"] = json{{"name", cfg.fixtures}, {"valid", valid}, {"total", rows.size()}, {"findings", findings}};
    } else {
      out << "fixture " << cfg.fixtures << ": " << valid << "/" << rows.size() << " paths valid\n";
      for (const auto& f : findings) out << "  " << f.get<std::string>() << '\n';
    }
  }

  if (!cfg.alphas.empty()) {
    const EJNetwork net = EJNetwork::build(single_alpha(cfg));
    OracleLimits limits{cfg.node_cap, std::nullopt};
    if (cfg.path_budget > 0) limits.path_budget = cfg.path_budget;
    if (net.size() > limits.node_cap) {
      throw UsageError("network has " + std::to_string(net.size()) + " nodes; raise --node-cap to verify it");
    }
    const SweepResult sweep = panconnectivity_list(net, {cfg.threads, PathRetention::kAll});
    CrossCheckReport report;
    if (const auto* failure = std::get_if<ChainFailure>(&sweep)) {
      report.discrepancies.push_back({failure->source, failure->target,
                                      "chain algorithm stuck at length " + std::to_string(failure->stuck.length())});
    } else {
      report = cross_check(net, std::get<PanTable>(sweep), limits);
    }
    all_ok = all_ok && report.clean();
    if (as_json) {
      doc["oracle"] = cross_check_to_json(net, report);
    } else {
      out << "oracle " << format_label(net.generator().value()) << ": " << report.pairs_checked << " pairs, "
          << report.discrepancies.size() << " discrepancies\n";
      for (const auto& d : report.discrepancies) {
        out << "  (" << format_compact(net.node(d.s)) << ", " << format_compact(net.node(d.d)) << "): " << d.detail
            << '\n';
      }
    }
  }

  if (as_json) {
    doc["ok"] = all_ok;
    out << doc.dump(2) << '\n';
  } else {
    out << (all_ok ? "VERIFIED" : "FAILED") << '\n';
  }
  return all_ok ? kExitOk : kExitFalse;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  std::vector<Generator> alphas;
  if (cfg.alphas.empty()) {
    alphas = {Generator(2, 3), Generator(3, 4), Generator(4, 5), Generator(5, 6)};
  } else {
    for (const auto& text : cfg.alphas) alphas.push_back(parse_alpha(text));
  }
  const auto retention = cfg.lengths_only ? PathRetention::kLengthsOnly : PathRetention::kAll;
  const auto rows = run_bench(alphas, std::max(1U, cfg.repeat), {cfg.threads, retention});
  const auto slope = fit_loglog_slope(rows);
  if (parse_format(cfg.format) == Format::kJson) {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back(json{{"alpha", generator_to_json(r.alpha)}, {"n", r.n}, {"seconds", r.seconds}, {"ok", r.succeeded}});
    }
    out << json{{"rows", list}, {"slope", slope ? json(*slope) : json(nullptr)}}.dump(2) << '\n';
  } else {
    out << "alpha\tn\tseconds\n";
    for (const auto& r : rows) {
      out << format_label(r.alpha.value()) << '\t' << r.n << '\t' << r.seconds << (r.succeeded ? "" : "\tFAILED")
          << '\n';
    }
    if (slope) out << "log-log slope: " << *slope << '\n';
  }
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.succeeded;
  return all_ok ? kExitOk : kExitFalse;
}

}  // namespace

Generator parse_alpha(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--alpha expects a,b but got '" + text + "'");
  std::size_t used_a = 0, used_b = 0;
  const std::string a_text = text.substr(0, comma);
  const std::string b_text = text.substr(comma + 1);
  const long long a = std::stoll(a_text, &used_a);
  const long long b = std::stoll(b_text, &used_b);
  if (used_a != a_text.size() || used_b != b_text.size()) {
    throw std::invalid_argument("--alpha expects integers a,b but got '" + text + "'");
  }
  return Generator(a, b);
}

std::vector<BenchRow> run_bench(const std::vector<Generator>& alphas, unsigned repeat, const SweepOptions& options) {
  std::vector<BenchRow> rows;
  for (const Generator& g : alphas) {
    const EJNetwork net = EJNetwork::build(g);
    BenchRow row{g, net.size(), INFINITY, true};
    for (unsigned r = 0; r < repeat; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SweepResult result = panconnectivity_list(net, options);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.seconds = std::min(row.seconds, seconds);
      row.succeeded = row.succeeded && std::holds_alternative<PanTable>(result);
    }
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> fit_loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(rows.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("EJNET_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
  return EJNET_FIXTURE_DIR;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eisenstein-Jacobi network construction and panconnectivity toolkit", "ejnet"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_alpha = [&cfg](CLI::App* sub, bool many) {
    auto* opt = sub->add_option("--alpha", cfg.alphas, many ? "Generator a,b (repeatable)" : "Generator a,b");
    opt->allow_extra_args(false);
    if (!many) opt->expected(1);
    return opt;
  };
  auto add_format = [&cfg](CLI::App* sub, const std::string& help) {
    sub->add_option("--format", cfg.format, help);
  };

  auto* info = app.add_subcommand("info", "Node count, diameter and distance profile with formula cross-check");
  add_alpha(info, false)->required();
  add_format(info, "text|json");

  auto* neighbors = app.add_subcommand("neighbors", "The six neighbors of a node");
  add_alpha(neighbors, false)->required();
  neighbors->add_option("--from", cfg.from, "Node label, e.g. 1+r")->required();
  add_format(neighbors, "text|json");

  auto* sp = app.add_subcommand("shortest-path", "First-discovered BFS shortest path");
  add_alpha(sp, false)->required();
  sp->add_option("--from", cfg.from)->required();
  sp->add_option("--to", cfg.to)->required();
  add_format(sp, "text|json");

  auto* pan = app.add_subcommand("panconnect", "Paths of every length for one pair or all pairs");
  add_alpha(pan, false)->required();
  pan->add_option("--from", cfg.from);
  pan->add_option("--to", cfg.to);
  pan->add_option("--out", cfg.out_path, "Output file (default stdout)");
  pan->add_flag("--lengths-only", cfg.lengths_only, "Omit path arrays");
  pan->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  add_format(pan, "json|text");

  auto* check = app.add_subcommand("check", "Panconnectivity check through one representative per distance");
  add_alpha(check, false)->required();
  add_format(check, "text|json");

  auto* cycles = app.add_subcommand("pancycles", "Cycles of every length 3..n through an edge");
  add_alpha(cycles, false)->required();
  cycles->add_option("--from", cfg.from)->required();
  cycles->add_option("--to", cfg.to)->required();
  add_format(cycles, "text|json");

  auto* exp = app.add_subcommand("export", "Network as JSON or DOT");
  add_alpha(exp, false)->required();
  exp->add_option("--out", cfg.out_path);
  add_format(exp, "json|dot");

  auto* verify = app.add_subcommand("verify", "Fixture validation and exhaustive oracle cross-check");
  add_alpha(verify, false);
  verify->add_option("--fixtures", cfg.fixtures, "Named fixture (table1) or a fixture file");
  verify->add_option("--node-cap", cfg.node_cap, "Largest network the oracle accepts");
  verify->add_option("--path-budget", cfg.path_budget, "DFS extensions allowed per pair (0 = unlimited)");
  verify->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  add_format(verify, "text|json");

  auto* bench = app.add_subcommand("bench", "Time the all-pairs sweep and fit the log-log slope");
  add_alpha(bench, true);
  bench->add_option("--repeat", cfg.repeat, "Runs per generator; the minimum is reported")->check(CLI::PositiveNumber);
  bench->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  bench->add_flag("--lengths-only", cfg.lengths_only, "Do not retain paths while timing");
  add_format(bench, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    if (cfg.command == "info") return cmd_info(cfg, out);
    if (cfg.command == "neighbors") return cmd_neighbors(cfg, out);
    if (cfg.command == "shortest-path") return cmd_shortest_path(cfg, out);
    if (cfg.command == "panconnect") return cmd_panconnect(cfg, out, err);
    if (cfg.command == "check") return cmd_check(cfg, out);
    if (cfg.command == "pancycles") return cmd_pancycles(cfg, out);
    if (cfg.command == "export") return cmd_export(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "bench") return cmd_bench(cfg, out);
  } catch (const GeneratorTooSmall& e) {
    err << "error: GeneratorTooSmall: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGenerator& e) {
    err << "error: InvalidGenerator: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LabelParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: value out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ChainStuck& e) {
    err << "error: " << e.what() << '\n';
    return kExitFalse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFalse;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace ejnet::cli
