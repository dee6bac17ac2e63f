#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ejnet/eisenstein.hpp"
#include "ejnet/path.hpp"

namespace ejnet {

inline constexpr std::size_t kDegree = 6;

/// Neighbor offsets in the fixed order used by every traversal:
/// +1, -1, +rho, -rho, +rho^2, -rho^2.
inline constexpr std::array<EJInt, kDegree> kOffsets{
    EJInt{1, 0}, EJInt{-1, 0}, EJInt{0, 1}, EJInt{0, -1}, EJInt{-1, 1}, EJInt{1, -1}};

class GeneratorTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class FormulaGap : public std::runtime_error {
 public:
  FormulaGap(const std::string& what, std::int64_t distance) : std::runtime_error(what), distance_(distance) {}
  std::int64_t distance() const { return distance_; }

 private:
  std::int64_t distance_;
};

/// Number of nodes at each distance s = 0..k from a fixed node.
struct DistanceProfile {
  std::vector<std::int64_t> w;
  std::int64_t k = 0;

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

/// The EJ graph on the residues modulo a generator. Immutable after build().
class EJNetwork {
 public:
  /// Throws GeneratorTooSmall when norm < 7 and ConstructionMismatch if the
  /// closure under the six offsets does not yield exactly norm nodes.
  static EJNetwork build(const Generator& g);

  const Generator& generator() const { return generator_; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const EJInt> nodes() const { return nodes_; }
  EJInt node(NodeId v) const { return nodes_.at(v); }

  /// Index of the residue class containing p (p need not be canonical).
  NodeId index_of(EJInt p) const;

  /// Neighbor indices in kOffsets order (six of them unless edges were removed).
  std::span<const NodeId> neighbors(NodeId v) const { return {adjacency_.at(v).data(), degree_.at(v)}; }
  std::size_t degree(NodeId v) const { return degree_.at(v); }
  /// kOffsets slot of the i-th entry of neighbors(v).
  std::size_t offset_slot(NodeId v, std::size_t i) const { return slots_.at(v).at(i); }
  bool adjacent(NodeId u, NodeId v) const;
  /// Whether the edge v -> v + kOffsets[slot] crosses the fundamental region.
  bool is_wraparound(NodeId v, std::size_t slot) const { return (wrap_mask_.at(v) >> slot) & 1U; }

  /// Copy with the undirected edge (u, v) deleted, for fault-injection runs.
  /// The copy is no longer 6-regular.
  EJNetwork with_edge_removed(NodeId u, NodeId v) const;

  /// Sorted intersection of the neighbor sets of u and v; empty for non-adjacent
  /// pairs without shared neighbors.
  std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const;

  /// The pair {u + d*rho, u + d - d*rho} for edge direction d = v - u, in that
  /// order. Both always lie in common_neighbors(u, v). Requires u, v adjacent.
  std::array<NodeId, 2> algebraic_common_neighbors(NodeId u, NodeId v) const;

  /// Common neighbors of an edge in path-extension priority: u + d - d*rho,
  /// then u + d*rho, then any further common neighbors in ascending index.
  std::span<const NodeId> extension_candidates(NodeId u, NodeId v) const;

  /// BFS hop distances from src.
  std::vector<std::int64_t> bfs_distances(NodeId src) const;
  std::int64_t distance(NodeId u, NodeId v) const;
  /// Minimum hex_weight over the class representatives of v - u.
  std::int64_t algebraic_distance(NodeId u, NodeId v) const;
  /// Largest BFS distance from node 0.
  std::int64_t bfs_diameter() const;

 private:
  struct CandidateList {
    std::array<NodeId, kDegree - 1> ids{};
    std::uint8_t count = 0;
  };

  explicit EJNetwork(const Generator& g) : generator_(g) {}
  std::size_t position_of(NodeId u, NodeId v) const;
  void rebuild_candidates();

  Generator generator_;
  std::vector<EJInt> nodes_;
  std::unordered_map<EJInt, NodeId> index_;
  std::vector<std::array<NodeId, kDegree>> adjacency_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::array<std::uint8_t, kDegree>> slots_;
  std::vector<std::uint8_t> wrap_mask_;
  std::vector<std::array<CandidateList, kDegree>> candidates_;
};

DistanceProfile distance_profile(const EJNetwork& net);

/// Closed-form layer sizes. Branch precedence: s = 0; s > k; integral t = (a+b)/2
/// with s = t (N - R); s = k with b = a (mod 3); 1 <= s < t; t < s < k.
/// Throws FormulaGap when some s in 1..k is covered by no branch.
DistanceProfile distance_profile_formula(const Generator& g);

/// Relocates every node m of the path to m - base. The image is a path of the
/// same length starting at start - base.
Path translate(const EJNetwork& net, const Path& path, NodeId base);

}  // namespace ejnet
