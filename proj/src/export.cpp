#include "ejnet/export.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ejnet {

using nlohmann::json;

std::string format_path(const EJNetwork& net, const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_compact(net.node(path.nodes[i]));
  }
  return out;
}

json node_to_json(EJInt p) { return json::array({p.x, p.y}); }

json generator_to_json(const Generator& g) { return json{{"a", g.a()}, {"b", g.b()}}; }

json network_to_json(const EJNetwork& net) {
  json nodes = json::array();
  for (const EJInt& p : net.nodes()) nodes.push_back(node_to_json(p));
  json edges = json::array();
  for (NodeId i = 0; i < net.size(); ++i) {
    std::vector<NodeId> higher;
    for (const NodeId j : net.neighbors(i)) {
      if (j > i) higher.push_back(j);
    }
    std::sort(higher.begin(), higher.end());
    for (const NodeId j : higher) edges.push_back(json::array({i, j}));
  }
  return json{{"alpha", generator_to_json(net.generator())},
              {"n", net.size()},
              {"diameter", net.generator().diameter()},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string network_to_dot(const EJNetwork& net) {
  std::ostringstream out;
  out << "graph EJ {\n";
  out << "  label=\"EJ network alpha=" << format_label(net.generator().value()) << "\";\n";
  for (NodeId i = 0; i < net.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_label(net.node(i)) << "\"];\n";
  }
  for (NodeId i = 0; i < net.size(); ++i) {
    const auto row = net.neighbors(i);
    for (std::size_t pos = 0; pos < row.size(); ++pos) {
      const NodeId j = row[pos];
      if (j <= i) continue;
      out << "  n" << i << " -- n" << j;
      if (net.is_wraparound(i, net.offset_slot(i, pos))) out << " [style=dashed]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

json path_to_json(const EJNetwork& net, const Path& path) {
  json nodes = json::array();
  for (const NodeId v : path.nodes) nodes.push_back(node_to_json(net.node(v)));
  return nodes;
}

}  // namespace

json pan_entry_to_json(const EJNetwork& net, const PanEntry& entry, bool include_paths) {
  json out{{"s", node_to_json(net.node(entry.source))},
           {"d", node_to_json(net.node(entry.target))},
           {"lengths", entry.lengths}};
  if (include_paths) {
    json paths = json::array();
    for (const Path& p : entry.paths) paths.push_back(path_to_json(net, p));
    out["paths"] = std::move(paths);
  }
  return out;
}

void write_pan_table_json(std::ostream& out, const EJNetwork& net, const PanTable& table, bool include_paths) {
  out << "{\"alpha\":" << generator_to_json(table.generator).dump() << ",\"n\":" << table.node_count
      << ",\"pairs\":[";
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (i > 0) out << ',';
    out << pan_entry_to_json(net, table.entries[i], include_paths).dump();
  }
  out << "]}\n";
}

json failure_to_json(const EJNetwork& net, const ChainFailure& failure) {
  return json{{"s", node_to_json(net.node(failure.source))},
              {"d", node_to_json(net.node(failure.target))},
              {"stuck_length", failure.stuck.length()},
              {"stuck_path", path_to_json(net, failure.stuck)}};
}

json check_report_to_json(const EJNetwork& net, const CheckReport& report) {
  json reps = json::array();
  for (const auto& r : report.representatives) {
    reps.push_back(json{{"node", node_to_json(net.node(r.node))},
                        {"hops", r.hops},
                        {"success", r.success},
                        {"reached_length", r.reached_length}});
  }
  return json{{"alpha", generator_to_json(net.generator())},
              {"panconnected", report.panconnected},
              {"representatives", std::move(reps)}};
}

json cross_check_to_json(const EJNetwork& net, const CrossCheckReport& report) {
  json found = json::array();
  for (const auto& d : report.discrepancies) {
    found.push_back(json{{"s", node_to_json(net.node(d.s))}, {"d", node_to_json(net.node(d.d))}, {"detail", d.detail}});
  }
  return json{{"alpha", generator_to_json(net.generator())},
              {"pairs_checked", report.pairs_checked},
              {"clean", report.clean()},
              {"discrepancies", std::move(found)}};
}

std::vector<std::vector<EJInt>> read_path_fixture(std::istream& in) {
  std::vector<std::vector<EJInt>> paths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<EJInt> labels;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        labels.push_back(parse_label(field));
      } catch (const LabelParseError& e) {
        throw LabelParseError("fixture line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    paths.push_back(std::move(labels));
  }
  return paths;
}

Path resolve_path(const EJNetwork& net, const std::vector<EJInt>& labels) {
  Path path;
  path.nodes.reserve(labels.size());
  for (const EJInt& p : labels) path.nodes.push_back(net.index_of(p));
  return path;
}

}  // namespace ejnet
