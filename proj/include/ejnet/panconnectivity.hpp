#pragma once

// Constructive panconnectivity: the chain algorithm grows a shortest s-d path
// one node at a time by splicing an unused common neighbor of two consecutive
// path nodes between them, yielding one path per length up to n - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ejnet/network.hpp"
#include "ejnet/path.hpp"

namespace ejnet {

/// Paths between source and target of consecutive lengths. `lengths` is
/// always filled; `paths` is empty when the run was asked not to keep them.
struct PanEntry {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<std::size_t> lengths;
  std::vector<Path> paths;

  bool has_paths() const { return !paths.empty(); }
};

/// Extension got stuck: no consecutive pair of `stuck` has an unused common neighbor.
struct ChainFailure {
  NodeId source = 0;
  NodeId target = 0;
  Path stuck;
};

using ChainResult = std::variant<PanEntry, ChainFailure>;

enum class PathRetention { kAll, kLengthsOnly };

/// Scans consecutive pairs from the front and splices in the first unused
/// common neighbor, in the network's extension_candidates order. Returns
/// std::nullopt when stuck. Requires a valid simple path shorter than n - 1.
std::optional<Path> chain_extend(const EJNetwork& net, const Path& path);

/// Repeats chain_extend from `shortest` until the path is Hamiltonian.
ChainResult chain_algorithm(const EJNetwork& net, const Path& shortest,
                            PathRetention retention = PathRetention::kAll);

/// All unordered pairs (i, j), i < j, in row-major order.
struct PanTable {
  Generator generator;
  std::size_t node_count = 0;
  std::vector<PanEntry> entries;

  /// Entry for the unordered pair {s, d}; nullptr when s == d or out of range.
  const PanEntry* find(NodeId s, NodeId d) const;
};

struct SweepOptions {
  unsigned threads = 1;
  PathRetention retention = PathRetention::kAll;
};

using SweepResult = std::variant<PanTable, ChainFailure>;

/// Runs the chain algorithm for every pair i < j. On failure returns the
/// first failing pair in (i, j) order regardless of thread count.
SweepResult panconnectivity_list(const EJNetwork& net, const SweepOptions& options = {});

struct RepresentativeOutcome {
  NodeId node = 0;
  std::int64_t hops = 0;
  bool success = false;
  /// Longest path length reached from node 0 to `node`.
  std::size_t reached_length = 0;
};

struct CheckReport {
  bool panconnected = false;
  std::vector<RepresentativeOutcome> representatives;
};

/// Chain algorithm from node 0 to one broadcast-list representative per
/// distance. Vertex transitivity makes this sufficient for the whole network.
CheckReport check_panconnectivity(const EJNetwork& net);

/// Closed walk stored without repeating the first node; length = node count.
struct Cycle {
  std::vector<NodeId> nodes;

  std::size_t length() const { return nodes.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

class NotAdjacent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ChainStuck : public std::runtime_error {
 public:
  explicit ChainStuck(ChainFailure failure);
  const ChainFailure& failure() const { return failure_; }

 private:
  ChainFailure failure_;
};

/// Closes every chain path of length >= 2 between adjacent s and d with the
/// edge (d, s): cycles of lengths 3..n. Throws NotAdjacent, or ChainStuck when
/// the chain cannot reach a Hamiltonian path.
std::vector<Cycle> pancycles(const EJNetwork& net, NodeId s, NodeId d);

/// Endpoints match, exactly l edges, no repeated node, consecutive nodes adjacent.
bool validate_path(const EJNetwork& net, const Path& path, NodeId s, NodeId d, std::size_t l);

/// At least 3 distinct nodes, consecutive adjacent, closing edge present.
bool validate_cycle(const EJNetwork& net, const Cycle& cycle);

}  // namespace ejnet
