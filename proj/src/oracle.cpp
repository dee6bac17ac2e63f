#include "ejnet/oracle.hpp"

#include <bitset>
#include <sstream>

namespace ejnet {

namespace {

inline constexpr std::size_t kMaxOracleNodes = 64;

class SimplePathWalker {
 public:
  SimplePathWalker(const EJNetwork& net, NodeId target, std::optional<std::uint64_t> budget)
      : net_(net), target_(target), budget_(budget) {}

  void walk(NodeId u, std::size_t depth) {
    if (u == target_) {
      lengths_.insert(depth);
      return;
    }
    for (const NodeId v : net_.neighbors(u)) {
      if (visited_[v]) continue;
      if (budget_ && ++expansions_ > *budget_) throw BudgetExhausted("oracle path budget exhausted");
      visited_[v] = true;
      walk(v, depth + 1);
      visited_[v] = false;
    }
  }

  std::bitset<kMaxOracleNodes>& visited() { return visited_; }
  std::set<std::size_t> take() { return std::move(lengths_); }

 private:
  const EJNetwork& net_;
  NodeId target_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t expansions_ = 0;
  std::bitset<kMaxOracleNodes> visited_;
  std::set<std::size_t> lengths_;
};

std::string describe(const std::set<std::size_t>& values) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

LengthSpectrum enumerate_lengths(const EJNetwork& net, NodeId s, NodeId d, const OracleLimits& limits) {
  if (net.size() > limits.node_cap || net.size() > kMaxOracleNodes) {
    throw NetworkTooLarge("exhaustive enumeration refused: network has " + std::to_string(net.size()) +
                          " nodes, cap is " + std::to_string(limits.node_cap));
  }
  if (s == d) throw std::invalid_argument("enumerate_lengths requires distinct endpoints");
  SimplePathWalker walker(net, d, limits.path_budget);
  walker.visited()[s] = true;
  walker.walk(s, 0);
  return {s, d, walker.take()};
}

CrossCheckReport cross_check(const EJNetwork& net, const PanTable& table, const OracleLimits& limits) {
  CrossCheckReport report;
  const std::size_t n = net.size();
  if (table.node_count != n || table.entries.size() != n * (n - 1) / 2) {
    report.discrepancies.push_back({0, 0, "table does not cover every unordered pair of this network"});
    return report;
  }

  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = s + 1; d < n; ++d) {
      ++report.pairs_checked;
      const PanEntry* entry = table.find(s, d);
      auto flag = [&](std::string detail) { report.discrepancies.push_back({s, d, std::move(detail)}); };
      if (entry == nullptr || entry->source != s || entry->target != d) {
        flag("missing or misplaced entry");
        continue;
      }
      const LengthSpectrum spectrum = enumerate_lengths(net, s, d, limits);
      const std::set<std::size_t> chain(entry->lengths.begin(), entry->lengths.end());

      for (const std::size_t l : chain) {
        if (!spectrum.achievable.contains(l)) flag("chain length " + std::to_string(l) + " is not achievable");
      }
      std::set<std::size_t> expected;
      for (std::size_t l = *spectrum.achievable.begin(); l < n; ++l) expected.insert(l);
      if (chain != expected || chain.size() != entry->lengths.size()) {
        flag("chain lengths " + describe(chain) + " differ from " + describe(expected));
      }
      if (spectrum.achievable != expected) {
        flag("oracle spectrum " + describe(spectrum.achievable) + " is not the full ladder " + describe(expected));
      }
      if (entry->has_paths()) {
        if (entry->paths.size() != entry->lengths.size()) flag("path count differs from length count");
        for (std::size_t i = 0; i < entry->paths.size() && i < entry->lengths.size(); ++i) {
          if (!validate_path(net, entry->paths[i], s, d, entry->lengths[i])) {
            flag("path " + std::to_string(i) + " of stated length " + std::to_string(entry->lengths[i]) +
                 " is invalid");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ejnet
