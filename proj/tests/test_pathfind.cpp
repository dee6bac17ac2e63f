#include <doctest.h>

#include <random>

#include "ejnet/panconnectivity.hpp"
#include "ejnet/pathfind.hpp"

using namespace ejnet;

namespace {

NodeId id(const EJNetwork& net, const char* label) { return net.index_of(parse_label(label)); }

}  // namespace

TEST_CASE("shortest path between rho and 1") {
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  const Path p = shortest_path(net, id(net, "r"), id(net, "1"));
  CHECK(p.length() == 1);
  CHECK(p.nodes == std::vector<NodeId>{id(net, "r"), id(net, "1")});
}

TEST_CASE("shortest path lengths match BFS layers") {
  for (const auto [a, b] : {std::pair{2, 3}, {3, 4}, {2, 4}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    const auto profile = distance_profile(net);
    std::vector<std::int64_t> layer_count(profile.w.size(), 0);
    for (NodeId v = 1; v < net.size(); ++v) {
      const Path p = shortest_path(net, 0, v);
      const auto d = net.distance(0, v);
      CHECK(static_cast<std::int64_t>(p.length()) == d);
      CHECK(validate_path(net, p, 0, v, p.length()));
      ++layer_count[p.length()];
    }
    layer_count[0] = 1;
    CHECK(layer_count == profile.w);
  }
}

TEST_CASE("shortest path optimality on sampled pairs") {
  const EJNetwork net = EJNetwork::build(Generator(5, 6));
  std::mt19937 rng(17);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(net.size() - 1));
  for (int trial = 0; trial < 500; ++trial) {
    const NodeId s = pick(rng), d = pick(rng);
    if (s == d) continue;
    const Path p = shortest_path(net, s, d);
    CHECK(static_cast<std::int64_t>(p.length()) == net.distance(s, d));
    CHECK(validate_path(net, p, s, d, p.length()));
  }
}

TEST_CASE("shortest path is deterministic") {
  const EJNetwork a = EJNetwork::build(Generator(4, 5));
  const EJNetwork b = EJNetwork::build(Generator(4, 5));
  for (NodeId v = 1; v < a.size(); ++v) CHECK(shortest_path(a, 3, v == 3 ? 0 : v) == shortest_path(b, 3, v == 3 ? 0 : v));
}

TEST_CASE("shortest path preconditions") {
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  CHECK_THROWS_AS(shortest_path(net, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(shortest_path(net, 0, 99), std::out_of_range);
}

TEST_CASE("broadcast list") {
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  const auto list = broadcast_list(net, 2);
  REQUIRE(list.size() == 2);
  CHECK(list[0].hops == 1);
  CHECK(list[1].hops == 2);
  CHECK(net.adjacent(0, list[0].node));
  for (const auto& e : list) {
    CHECK(static_cast<std::int64_t>(e.path.length()) == e.hops);
    CHECK(validate_path(net, e.path, 0, e.node, e.path.length()));
    CHECK(net.distance(0, e.node) == e.hops);
  }
  // First discovery under the fixed offset order: +1 is the first neighbor of 0.
  CHECK(list[0].node == id(net, "1"));
}

TEST_CASE("broadcast list covers every distance up to the diameter") {
  for (const auto [a, b] : {std::pair{3, 4}, {4, 5}, {5, 6}, {1, 4}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    const auto k = net.bfs_diameter();
    const auto list = broadcast_list(net, k);
    REQUIRE(static_cast<std::int64_t>(list.size()) == k);
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].hops == static_cast<std::int64_t>(i + 1));
      CHECK(validate_path(net, list[i].path, 0, list[i].node, i + 1));
    }
  }
}

TEST_CASE("broadcast list beyond the diameter is incomplete") {
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  CHECK_THROWS_AS(broadcast_list(net, 3), IncompleteList);
}
