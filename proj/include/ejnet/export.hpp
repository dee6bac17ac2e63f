#pragma once

// Text, JSON and DOT renderings plus the plain-text path fixture format
// (one path per line, comma-separated node labels, '#' starts a comment).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ejnet/network.hpp"
#include "ejnet/oracle.hpp"
#include "ejnet/panconnectivity.hpp"
#include "ejnet/pathfind.hpp"

namespace ejnet {

/// "r, 0, 1" style rendering with compact labels.
std::string format_path(const EJNetwork& net, const Path& path);

nlohmann::json node_to_json(EJInt p);
nlohmann::json generator_to_json(const Generator& g);

/// { alpha, n, diameter, nodes: [[x,y],...], edges: [[i,j],...] } with i < j.
nlohmann::json network_to_json(const EJNetwork& net);

/// Undirected graph, one node per residue labeled x+y*r; wraparound edges dashed.
std::string network_to_dot(const EJNetwork& net);

nlohmann::json pan_entry_to_json(const EJNetwork& net, const PanEntry& entry, bool include_paths);

/// Streams { alpha, n, pairs: [...] } without materializing the whole document.
void write_pan_table_json(std::ostream& out, const EJNetwork& net, const PanTable& table, bool include_paths);

nlohmann::json failure_to_json(const EJNetwork& net, const ChainFailure& failure);
nlohmann::json check_report_to_json(const EJNetwork& net, const CheckReport& report);
nlohmann::json cross_check_to_json(const EJNetwork& net, const CrossCheckReport& report);

/// Parses fixture lines into label sequences. Throws LabelParseError with the
/// offending line number.
std::vector<std::vector<EJInt>> read_path_fixture(std::istream& in);

/// Maps raw labels to node indices modulo the network's generator.
Path resolve_path(const EJNetwork& net, const std::vector<EJInt>& labels);

}  // namespace ejnet
