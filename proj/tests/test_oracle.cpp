#include <doctest.h>

#include "ejnet/oracle.hpp"
#include "ejnet/pathfind.hpp"

using namespace ejnet;

TEST_CASE("K7 admits every length") {
  const EJNetwork net = EJNetwork::build(Generator(1, 2));
  for (NodeId s = 0; s < net.size(); ++s) {
    for (NodeId d = 0; d < net.size(); ++d) {
      if (s == d) continue;
      CHECK(enumerate_lengths(net, s, d).achievable == std::set<std::size_t>{1, 2, 3, 4, 5, 6});
    }
  }
}

TEST_CASE("spectrum bounds and symmetry") {
  const EJNetwork net = EJNetwork::build(Generator(2, 2));
  for (NodeId s = 0; s < net.size(); ++s) {
    for (NodeId d = s + 1; d < net.size(); ++d) {
      const auto fwd = enumerate_lengths(net, s, d);
      const auto back = enumerate_lengths(net, d, s);
      CHECK(fwd.achievable == back.achievable);
      REQUIRE_FALSE(fwd.achievable.empty());
      CHECK(static_cast<std::int64_t>(*fwd.achievable.begin()) == net.distance(s, d));
      CHECK(*fwd.achievable.rbegin() <= net.size() - 1);
    }
  }
}

TEST_CASE("limits") {
  const EJNetwork big = EJNetwork::build(Generator(2, 3));
  CHECK_THROWS_AS(enumerate_lengths(big, 0, 1), NetworkTooLarge);
  CHECK_THROWS_AS(enumerate_lengths(big, 0, 1, {19, 50}), BudgetExhausted);
  const EJNetwork small = EJNetwork::build(Generator(1, 2));
  CHECK_THROWS_AS(enumerate_lengths(small, 0, 0), std::invalid_argument);
  CHECK(enumerate_lengths(small, 0, 1, {13, 1'000'000}).achievable.size() == 6);
}

TEST_CASE("cross-check is clean on the small networks") {
  for (const auto [a, b] : {std::pair{1, 2}, {2, 2}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    const auto table = std::get<PanTable>(panconnectivity_list(net));
    const CrossCheckReport report = cross_check(net, table);
    CHECK(report.clean());
    CHECK(report.pairs_checked == net.size() * (net.size() - 1) / 2);
  }
}

TEST_CASE("cross-check catches tampering") {
  const EJNetwork net = EJNetwork::build(Generator(2, 2));
  const auto clean = std::get<PanTable>(panconnectivity_list(net));

  SUBCASE("path swapped for an invalid one") {
    PanTable table = clean;
    auto& nodes = table.entries[4].paths[2].nodes;
    nodes[1] = nodes[0];
    CHECK_FALSE(cross_check(net, table).clean());
  }
  SUBCASE("length gap") {
    PanTable table = clean;
    table.entries[7].lengths.pop_back();
    table.entries[7].paths.pop_back();
    CHECK_FALSE(cross_check(net, table).clean());
  }
  SUBCASE("unachievable length claimed") {
    PanTable table = clean;
    table.entries[0].lengths.push_back(net.size());
    CHECK_FALSE(cross_check(net, table).clean());
  }
  SUBCASE("missing pairs") {
    PanTable table = clean;
    table.entries.pop_back();
    CHECK_FALSE(cross_check(net, table).clean());
  }
}
