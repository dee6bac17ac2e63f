#include "ejnet/network.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace ejnet {

namespace {

inline constexpr std::int64_t kMinimumNorm = 7;

}  // namespace

EJNetwork EJNetwork::build(const Generator& g) {
  const std::int64_t n = g.norm();
  if (n < kMinimumNorm) {
    throw GeneratorTooSmall("generator " + format_label(g.value()) + " has norm " + std::to_string(n) +
                            "; at least 7 is required for a 6-regular network");
  }

  EJNetwork net(g);

  // Closure of the zero residue under the six offsets.
  std::vector<EJInt> discovered{EJInt{0, 0}};
  std::unordered_set<EJInt> seen{EJInt{0, 0}};
  std::deque<EJInt> queue{EJInt{0, 0}};
  while (!queue.empty()) {
    const EJInt u = queue.front();
    queue.pop_front();
    for (const EJInt& offset : kOffsets) {
      const EJInt v = reduce(u + offset, g);
      if (seen.insert(v).second) {
        discovered.push_back(v);
        queue.push_back(v);
      }
    }
  }
  if (static_cast<std::int64_t>(discovered.size()) != n) {
    throw ConstructionMismatch("closure produced " + std::to_string(discovered.size()) + " nodes, expected " +
                               std::to_string(n));
  }

  std::sort(discovered.begin(), discovered.end(), canonical_less);
  net.nodes_ = std::move(discovered);
  net.index_.reserve(net.nodes_.size());
  for (NodeId i = 0; i < net.nodes_.size(); ++i) net.index_.emplace(net.nodes_[i], i);

  net.adjacency_.resize(net.nodes_.size());
  net.degree_.assign(net.nodes_.size(), static_cast<std::uint8_t>(kDegree));
  net.slots_.resize(net.nodes_.size());
  net.wrap_mask_.assign(net.nodes_.size(), 0);
  for (NodeId i = 0; i < net.nodes_.size(); ++i) {
    for (std::size_t slot = 0; slot < kDegree; ++slot) {
      const EJInt raw = net.nodes_[i] + kOffsets[slot];
      const EJInt canonical = reduce(raw, g);
      net.adjacency_[i][slot] = net.index_.at(canonical);
      net.slots_[i][slot] = static_cast<std::uint8_t>(slot);
      if (!(raw == canonical)) net.wrap_mask_[i] |= static_cast<std::uint8_t>(1U << slot);
    }
    auto sorted = net.adjacency_[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        std::binary_search(sorted.begin(), sorted.end(), i)) {
      throw ConstructionMismatch("node " + format_label(net.nodes_[i]) + " does not have 6 distinct neighbors");
    }
  }
  net.rebuild_candidates();
  return net;
}

void EJNetwork::rebuild_candidates() {
  candidates_.assign(nodes_.size(), {});
  for (NodeId u = 0; u < nodes_.size(); ++u) {
    for (std::size_t i = 0; i < degree_[u]; ++i) {
      const NodeId v = adjacency_[u][i];
      const auto common = common_neighbors(u, v);
      const auto [via_rho, via_complement] = algebraic_common_neighbors(u, v);
      CandidateList& list = candidates_[u][i];
      auto push = [&list, &common](NodeId c) {
        const auto end = list.ids.begin() + list.count;
        if (std::find(list.ids.begin(), end, c) != end) return;
        if (!std::binary_search(common.begin(), common.end(), c)) return;
        list.ids[list.count++] = c;
      };
      push(via_complement);
      push(via_rho);
      for (const NodeId c : common) push(c);
    }
  }
}

EJNetwork EJNetwork::with_edge_removed(NodeId u, NodeId v) const {
  EJNetwork copy = *this;
  auto erase = [&copy](NodeId from, NodeId to) {
    const std::size_t pos = copy.position_of(from, to);
    auto& row = copy.adjacency_[from];
    auto& slots = copy.slots_[from];
    const std::size_t deg = copy.degree_[from];
    for (std::size_t i = pos; i + 1 < deg; ++i) {
      row[i] = row[i + 1];
      slots[i] = slots[i + 1];
    }
    --copy.degree_[from];
  };
  erase(u, v);
  erase(v, u);
  copy.rebuild_candidates();
  return copy;
}

NodeId EJNetwork::index_of(EJInt p) const { return index_.at(reduce(p, generator_)); }

bool EJNetwork::adjacent(NodeId u, NodeId v) const {
  const auto row = neighbors(u);
  return std::find(row.begin(), row.end(), v) != row.end();
}

std::size_t EJNetwork::position_of(NodeId u, NodeId v) const {
  const auto row = neighbors(u);
  const auto it = std::find(row.begin(), row.end(), v);
  if (it == row.end()) {
    throw std::invalid_argument("nodes " + format_label(node(u)) + " and " + format_label(node(v)) +
                                " are not adjacent");
  }
  return static_cast<std::size_t>(it - row.begin());
}

std::vector<NodeId> EJNetwork::common_neighbors(NodeId u, NodeId v) const {
  const auto nu = neighbors(u);
  const auto nv = neighbors(v);
  std::array<NodeId, kDegree> a{};
  std::array<NodeId, kDegree> b{};
  std::copy(nu.begin(), nu.end(), a.begin());
  std::copy(nv.begin(), nv.end(), b.begin());
  std::sort(a.begin(), a.begin() + nu.size());
  std::sort(b.begin(), b.begin() + nv.size());
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.begin() + nu.size(), b.begin(), b.begin() + nv.size(),
                        std::back_inserter(out));
  return out;
}

std::array<NodeId, 2> EJNetwork::algebraic_common_neighbors(NodeId u, NodeId v) const {
  const EJInt direction = kOffsets[slots_.at(u)[position_of(u, v)]];
  const EJInt base = node(u);
  const EJInt turned = direction * kRho;
  return {index_of(base + turned), index_of(base + direction - turned)};
}

std::span<const NodeId> EJNetwork::extension_candidates(NodeId u, NodeId v) const {
  const CandidateList& list = candidates_.at(u)[position_of(u, v)];
  return {list.ids.data(), list.count};
}

std::vector<std::int64_t> EJNetwork::bfs_distances(NodeId src) const {
  std::vector<std::int64_t> dist(size(), -1);
  std::vector<NodeId> queue;
  queue.reserve(size());
  dist.at(src) = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const NodeId v : neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::int64_t EJNetwork::distance(NodeId u, NodeId v) const { return bfs_distances(u).at(v); }

std::int64_t EJNetwork::algebraic_distance(NodeId u, NodeId v) const {
  const EJInt alpha = generator_.value();
  const EJInt residue = reduce(node(v) - node(u), generator_);
  // Any minimum-weight representative has norm at most k^2 <= N, so it lies
  // within two generator steps of the canonical residue.
  std::int64_t best = hex_weight(residue);
  for (std::int64_t i = -2; i <= 2; ++i) {
    for (std::int64_t j = -2; j <= 2; ++j) {
      best = std::min(best, hex_weight(residue - EJInt{i, j} * alpha));
    }
  }
  return best;
}

std::int64_t EJNetwork::bfs_diameter() const {
  const auto dist = bfs_distances(0);
  return *std::max_element(dist.begin(), dist.end());
}

DistanceProfile distance_profile(const EJNetwork& net) {
  const auto dist = net.bfs_distances(0);
  DistanceProfile profile;
  profile.k = *std::max_element(dist.begin(), dist.end());
  profile.w.assign(static_cast<std::size_t>(profile.k) + 1, 0);
  for (const std::int64_t d : dist) ++profile.w[static_cast<std::size_t>(d)];
  return profile;
}

DistanceProfile distance_profile_formula(const Generator& g) {
  const std::int64_t a = g.a();
  const std::int64_t b = g.b();
  const std::int64_t n = g.norm();
  const std::int64_t k = g.diameter();
  // t = (a + b) / 2 is compared through 2s against a + b to stay exact.
  const std::int64_t twice_t = a + b;
  const bool integral_t = twice_t % 2 == 0;

  DistanceProfile profile;
  profile.k = k;
  profile.w.assign(static_cast<std::size_t>(k) + 1, 0);
  std::int64_t deferred = -1;
  std::int64_t rest = 0;
  for (std::int64_t s = 0; s <= k; ++s) {
    std::int64_t value;
    if (s == 0) {
      value = 1;
    } else if (integral_t && 2 * s == twice_t) {
      deferred = s;
      continue;
    } else if (s == k && (b - a) % 3 == 0) {
      value = 2;
    } else if (2 * s < twice_t) {
      value = 6 * s;
    } else if (2 * s > twice_t && s < k) {
      value = 18 * (k - s);
    } else {
      throw FormulaGap("distance " + std::to_string(s) + " of generator " + format_label(g.value()) +
                           " falls in no branch of the layer-size formula",
                       s);
    }
    profile.w[static_cast<std::size_t>(s)] = value;
    rest += value;
  }
  if (deferred >= 0) profile.w[static_cast<std::size_t>(deferred)] = n - rest;
  return profile;
}

Path translate(const EJNetwork& net, const Path& path, NodeId base) {
  const EJInt shift = net.node(base);
  Path out;
  out.nodes.reserve(path.nodes.size());
  for (const NodeId m : path.nodes) out.nodes.push_back(net.index_of(net.node(m) - shift));
  return out;
}

}  // namespace ejnet
