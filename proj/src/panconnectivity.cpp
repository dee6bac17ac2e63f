#include "ejnet/panconnectivity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "ejnet/pathfind.hpp"

namespace ejnet {

namespace {

// One extension step on a path whose membership bitmap is kept in sync.
bool extend_in_place(const EJNetwork& net, std::vector<NodeId>& nodes, std::vector<char>& in_path) {
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    for (const NodeId c : net.extension_candidates(nodes[i], nodes[i + 1])) {
      if (in_path[c]) continue;
      nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i + 1), c);
      in_path[c] = 1;
      return true;
    }
  }
  return false;
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

std::optional<Path> chain_extend(const EJNetwork& net, const Path& path) {
  if (path.nodes.size() >= net.size()) {
    throw std::invalid_argument("chain_extend: path is already Hamiltonian");
  }
  std::vector<char> in_path(net.size(), 0);
  for (const NodeId v : path.nodes) in_path.at(v) = 1;
  Path out = path;
  if (!extend_in_place(net, out.nodes, in_path)) return std::nullopt;
  return out;
}

ChainResult chain_algorithm(const EJNetwork& net, const Path& shortest, PathRetention retention) {
  if (shortest.nodes.size() < 2) throw std::invalid_argument("chain_algorithm: seed path needs two endpoints");
  const std::size_t n = net.size();

  PanEntry entry{shortest.front(), shortest.back(), {}, {}};
  entry.lengths.reserve(n);
  if (retention == PathRetention::kAll) entry.paths.reserve(n);

  std::vector<char> in_path(n, 0);
  for (const NodeId v : shortest.nodes) in_path.at(v) = 1;
  Path current = shortest;

  auto record = [&] {
    entry.lengths.push_back(current.length());
    if (retention == PathRetention::kAll) entry.paths.push_back(current);
  };
  record();
  while (current.length() < n - 1) {
    if (!extend_in_place(net, current.nodes, in_path)) {
      return ChainFailure{entry.source, entry.target, std::move(current)};
    }
    record();
  }
  return entry;
}

const PanEntry* PanTable::find(NodeId s, NodeId d) const {
  if (s == d || s >= node_count || d >= node_count) return nullptr;
  const auto [i, j] = std::minmax(s, d);
  return &entries.at(pair_index(node_count, i, j));
}

SweepResult panconnectivity_list(const EJNetwork& net, const SweepOptions& options) {
  const std::size_t n = net.size();
  const std::size_t pair_count = n * (n - 1) / 2;

  std::vector<PanEntry> entries(pair_count);
  std::vector<ChainFailure> failures(pair_count);
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next_row{0};

  // Rows are claimed dynamically; pairs past the earliest known failure are
  // skipped, so every pair before it is always computed.
  auto worker = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t idx = pair_index(n, i, j);
        if (idx >= first_failure.load()) break;
        const Path seed = shortest_path(net, static_cast<NodeId>(i), static_cast<NodeId>(j));
        ChainResult result = chain_algorithm(net, seed, options.retention);
        if (auto* ok = std::get_if<PanEntry>(&result)) {
          entries[idx] = std::move(*ok);
        } else {
          failures[idx] = std::get<ChainFailure>(std::move(result));
          std::size_t seen = first_failure.load();
          while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {
          }
          break;
        }
      }
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (const std::size_t bad = first_failure.load(); bad != std::numeric_limits<std::size_t>::max()) {
    return std::move(failures[bad]);
  }
  return PanTable{net.generator(), n, std::move(entries)};
}

CheckReport check_panconnectivity(const EJNetwork& net) {
  CheckReport report;
  report.panconnected = true;
  for (const BroadcastEntry& rep : broadcast_list(net, net.bfs_diameter())) {
    RepresentativeOutcome outcome{rep.node, rep.hops, false, 0};
    const ChainResult result = chain_algorithm(net, rep.path, PathRetention::kLengthsOnly);
    if (const auto* ok = std::get_if<PanEntry>(&result)) {
      outcome.success = true;
      outcome.reached_length = ok->lengths.back();
    } else {
      outcome.reached_length = std::get<ChainFailure>(result).stuck.length();
      report.panconnected = false;
    }
    report.representatives.push_back(outcome);
  }
  return report;
}

ChainStuck::ChainStuck(ChainFailure failure)
    : std::runtime_error("chain algorithm stuck at length " + std::to_string(failure.stuck.length())),
      failure_(std::move(failure)) {}

std::vector<Cycle> pancycles(const EJNetwork& net, NodeId s, NodeId d) {
  if (s == d || !net.adjacent(s, d)) {
    throw NotAdjacent("pancycles requires an edge, got " + format_label(net.node(s)) + " and " +
                      format_label(net.node(d)));
  }
  ChainResult result = chain_algorithm(net, Path{{s, d}});
  if (auto* failure = std::get_if<ChainFailure>(&result)) throw ChainStuck(std::move(*failure));

  std::vector<Cycle> cycles;
  for (Path& path : std::get<PanEntry>(result).paths) {
    if (path.length() < 2) continue;
    cycles.push_back(Cycle{std::move(path.nodes)});
  }
  return cycles;
}

bool validate_path(const EJNetwork& net, const Path& path, NodeId s, NodeId d, std::size_t l) {
  if (path.nodes.size() != l + 1) return false;
  if (path.front() != s || path.back() != d) return false;
  std::vector<char> seen(net.size(), 0);
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    const NodeId v = path.nodes[i];
    if (v >= net.size() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !net.adjacent(path.nodes[i - 1], v)) return false;
  }
  return true;
}

bool validate_cycle(const EJNetwork& net, const Cycle& cycle) {
  if (cycle.nodes.size() < 3) return false;
  const Path open{cycle.nodes};
  return validate_path(net, open, open.front(), open.back(), open.length()) &&
         net.adjacent(open.back(), open.front());
}

}  // namespace ejnet
