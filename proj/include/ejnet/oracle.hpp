#pragma once

// Brute-force ground truth for small networks: exhaustive depth-first
// enumeration of simple paths, independent of the chain algorithm.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ejnet/network.hpp"
#include "ejnet/panconnectivity.hpp"

namespace ejnet {

inline constexpr std::size_t kDefaultNodeCap = 13;

struct OracleLimits {
  std::size_t node_cap = kDefaultNodeCap;
  /// Maximum number of DFS path extensions per pair; unlimited when empty.
  std::optional<std::uint64_t> path_budget;
};

class NetworkTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lengths of all simple s-d paths.
struct LengthSpectrum {
  NodeId s = 0;
  NodeId d = 0;
  std::set<std::size_t> achievable;
};

/// Throws NetworkTooLarge when the network exceeds limits.node_cap and
/// BudgetExhausted when the DFS exceeds limits.path_budget.
LengthSpectrum enumerate_lengths(const EJNetwork& net, NodeId s, NodeId d, const OracleLimits& limits = {});

struct Discrepancy {
  NodeId s = 0;
  NodeId d = 0;
  std::string detail;
};

struct CrossCheckReport {
  std::size_t pairs_checked = 0;
  std::vector<Discrepancy> discrepancies;

  bool clean() const { return discrepancies.empty(); }
};

/// For every pair: chain lengths must be achievable, must equal
/// {distance, ..., n - 1}, and every retained path must validate.
CrossCheckReport cross_check(const EJNetwork& net, const PanTable& table, const OracleLimits& limits = {});

}  // namespace ejnet
