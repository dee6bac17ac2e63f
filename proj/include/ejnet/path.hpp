#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ejnet {

using NodeId = std::uint32_t;

/// Ordered node sequence; length is the edge count.
struct Path {
  std::vector<NodeId> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

}  // namespace ejnet
