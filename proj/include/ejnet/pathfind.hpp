#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ejnet/network.hpp"
#include "ejnet/path.hpp"

namespace ejnet {

/// One representative per BFS layer around node 0.
struct BroadcastEntry {
  NodeId node = 0;
  std::int64_t hops = 0;
  Path path;
};

class IncompleteList : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// First-discovered shortest path under the fixed neighbor order. Requires s != d.
Path shortest_path(const EJNetwork& net, NodeId s, NodeId d);

/// For each distance 1..k, the first node BFS from node 0 discovers at that
/// distance together with its shortest path. Throws IncompleteList when some
/// distance yields no node.
std::vector<BroadcastEntry> broadcast_list(const EJNetwork& net, std::int64_t k);

}  // namespace ejnet
