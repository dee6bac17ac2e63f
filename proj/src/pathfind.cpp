#include "ejnet/pathfind.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ejnet {

namespace {

inline constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

Path unwind(const std::vector<NodeId>& parent, NodeId target) {
  Path path;
  for (NodeId v = target; v != kNoParent; v = parent[v]) path.nodes.push_back(v);
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

}  // namespace

Path shortest_path(const EJNetwork& net, NodeId s, NodeId d) {
  if (s == d) throw std::invalid_argument("shortest_path requires distinct endpoints");
  if (s >= net.size() || d >= net.size()) throw std::out_of_range("shortest_path: node index out of range");

  std::vector<NodeId> parent(net.size(), kNoParent);
  std::vector<char> visited(net.size(), 0);
  std::vector<NodeId> queue{s};
  visited[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const NodeId v : net.neighbors(u)) {
      if (visited[v]) continue;
      visited[v] = 1;
      parent[v] = u;
      if (v == d) return unwind(parent, d);
      queue.push_back(v);
    }
  }
  throw std::logic_error("shortest_path: destination unreachable");
}

std::vector<BroadcastEntry> broadcast_list(const EJNetwork& net, std::int64_t k) {
  std::vector<BroadcastEntry> list;
  std::vector<NodeId> parent(net.size(), kNoParent);
  std::vector<std::int64_t> hops(net.size(), -1);
  std::vector<NodeId> queue{0};
  hops[0] = 0;
  std::int64_t next_layer = 1;
  for (std::size_t head = 0; head < queue.size() && next_layer <= k; ++head) {
    const NodeId u = queue[head];
    for (const NodeId v : net.neighbors(u)) {
      if (hops[v] >= 0) continue;
      hops[v] = hops[u] + 1;
      parent[v] = u;
      // FIFO order finalizes layers in sequence, so no layer can be skipped.
      if (hops[v] > next_layer) throw std::logic_error("broadcast_list: BFS skipped a layer");
      if (hops[v] == next_layer) {
        list.push_back({v, hops[v], unwind(parent, v)});
        ++next_layer;
      }
      queue.push_back(v);
    }
  }
  if (next_layer <= k) {
    throw IncompleteList("no node found at distance " + std::to_string(next_layer) + " (requested " +
                         std::to_string(k) + " layers)");
  }
  return list;
}

}  // namespace ejnet
