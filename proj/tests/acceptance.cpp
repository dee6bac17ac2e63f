// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "ejnet/export.hpp"
#include "ejnet/network.hpp"
#include "ejnet/oracle.hpp"
#include "ejnet/panconnectivity.hpp"
#include "ejnet/pathfind.hpp"

using namespace ejnet;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  json artifact;  // deterministic output compared across runs

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

NodeId id(const EJNetwork& net, const char* label) { return net.index_of(parse_label(label)); }

json path_json(const Path& p) { return json(p.nodes); }

Outcome table1_chain() {
  Outcome o;
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  const NodeId r = id(net, "r"), one = id(net, "1");
  const ChainResult result = chain_algorithm(net, shortest_path(net, r, one));
  if (!std::holds_alternative<PanEntry>(result)) {
    o.fail("chain stuck");
    return o;
  }
  const PanEntry& e = std::get<PanEntry>(result);
  if (e.paths.size() != 18) o.fail(std::to_string(e.paths.size()) + " paths");
  for (std::size_t i = 0; i < e.paths.size(); ++i) {
    if (e.lengths[i] != i + 1 || !validate_path(net, e.paths[i], r, one, i + 1)) {
      o.fail("path of length " + std::to_string(i + 1) + " invalid");
    }
  }
  o.artifact = pan_entry_to_json(net, e, true);
  if (o.pass) o.detail = "18 paths, lengths 1..18";
  return o;
}

Outcome table1_fixture() {
  Outcome o;
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  std::ifstream in(cli::fixture_dir() + "/table1.txt");
  if (!in) {
    o.fail("fixture missing");
    return o;
  }
  const auto rows = read_path_fixture(in);
  const NodeId r = id(net, "r"), one = id(net, "1");
  std::size_t valid = 0;
  json paths = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Path p = resolve_path(net, rows[i]);
    paths.push_back(path_json(p));
    if (validate_path(net, p, r, one, i + 1)) ++valid;
  }
  if (rows.size() != 18 || valid != 18) o.fail(std::to_string(valid) + "/" + std::to_string(rows.size()) + " valid");
  o.artifact = paths;
  if (o.pass) o.detail = "18/18 paths valid";
  return o;
}

Outcome sweep_desk_scale() {
  Outcome o;
  json tables = json::array();
  std::string summary;
  for (const auto [a, b] : {std::pair{2, 3}, {3, 4}, {4, 5}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    const SweepResult result = panconnectivity_list(net);
    if (const auto* f = std::get_if<ChainFailure>(&result)) {
      o.fail("EJ(" + std::to_string(a) + "," + std::to_string(b) + ") stuck at pair (" +
             format_compact(net.node(f->source)) + ", " + format_compact(net.node(f->target)) + ") length " +
             std::to_string(f->stuck.length()));
      tables.push_back(failure_to_json(net, *f));
      continue;
    }
    const PanTable& table = std::get<PanTable>(result);
    for (const PanEntry& e : table.entries) {
      const auto dist = static_cast<std::size_t>(net.distance(e.source, e.target));
      bool ok = e.lengths.size() == net.size() - dist;
      for (std::size_t i = 0; ok && i < e.lengths.size(); ++i) {
        ok = e.lengths[i] == dist + i && validate_path(net, e.paths[i], e.source, e.target, e.lengths[i]);
      }
      if (!ok) o.fail("bad ladder at pair (" + std::to_string(e.source) + ", " + std::to_string(e.target) + ")");
    }
    std::ostringstream text;
    write_pan_table_json(text, net, table, true);
    tables.push_back(text.str());
    summary += (summary.empty() ? "" : ", ") + std::to_string(table.entries.size()) + " pairs (n=" +
               std::to_string(net.size()) + ")";
  }
  o.artifact = tables;
  if (o.pass) o.detail = summary + ", 0 failures";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  json reports = json::array();
  std::string summary;
  for (const auto [a, b] : {std::pair{1, 2}, {2, 2}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    const SweepResult result = panconnectivity_list(net);
    if (!std::holds_alternative<PanTable>(result)) {
      o.fail("chain stuck on EJ(" + std::to_string(a) + "," + std::to_string(b) + ")");
      continue;
    }
    const CrossCheckReport report = cross_check(net, std::get<PanTable>(result));
    reports.push_back(cross_check_to_json(net, report));
    if (!report.clean()) o.fail(std::to_string(report.discrepancies.size()) + " discrepancies");
    summary += (summary.empty() ? "" : ", ") + std::to_string(report.pairs_checked) + " pairs";
  }
  o.artifact = reports;
  if (o.pass) o.detail = summary + ", 0 discrepancies";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  json profiles = json::array();
  for (const auto [a, b] : {std::pair{2, 3}, {3, 4}, {4, 5}, {5, 6}}) {
    const Generator g(a, b);
    const EJNetwork net = EJNetwork::build(g);
    const std::string tag = "EJ(" + std::to_string(a) + "," + std::to_string(b) + "): ";
    if (static_cast<std::int64_t>(net.size()) != a * a + a * b + b * b) o.fail(tag + "node count");
    for (NodeId v = 0; v < net.size(); ++v) {
      const auto row = net.neighbors(v);
      std::vector<NodeId> sorted(row.begin(), row.end());
      std::sort(sorted.begin(), sorted.end());
      if (row.size() != 6 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        o.fail(tag + "not 6-regular");
      }
      for (const NodeId w : row) {
        if (!net.adjacent(w, v)) o.fail(tag + "asymmetric adjacency");
      }
    }
    const DistanceProfile bfs = distance_profile(net);
    std::int64_t total = 0;
    for (const auto w : bfs.w) total += w;
    if (total != g.norm()) o.fail(tag + "profile sum");
    if (bfs.k != (a + 2 * b) / 3 || net.bfs_diameter() != bfs.k) o.fail(tag + "diameter");
    try {
      if (!(distance_profile_formula(g) == bfs)) o.fail(tag + "formula profile differs from BFS");
    } catch (const FormulaGap& gap) {
      o.fail(tag + gap.what());
    }
    profiles.push_back(json{{"alpha", generator_to_json(g)}, {"profile", bfs.w}, {"k", bfs.k}});
  }
  o.artifact = profiles;
  if (o.pass) o.detail = "4 networks, all invariants exact";
  return o;
}

Outcome common_neighbor_pairs() {
  Outcome o;
  std::size_t edges = 0;
  for (const auto [a, b] : {std::pair{2, 3}, {3, 4}}) {
    const EJNetwork net = EJNetwork::build(Generator(a, b));
    for (NodeId u = 0; u < net.size(); ++u) {
      for (const NodeId v : net.neighbors(u)) {
        ++edges;
        const auto cn = net.common_neighbors(u, v);
        const auto alg = net.algebraic_common_neighbors(u, v);
        std::vector<NodeId> expected{alg[0], alg[1]};
        std::sort(expected.begin(), expected.end());
        if (cn.size() != 2 || cn != expected) {
          o.fail("edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
      }
    }
  }
  o.artifact = edges;
  if (o.pass) o.detail = std::to_string(edges) + " directed edges, each with exactly the algebraic pair";
  return o;
}

Outcome translation_transport() {
  Outcome o;
  const EJNetwork net = EJNetwork::build(Generator(3, 4));
  const NodeId zero = id(net, "0"), rho = id(net, "r");
  const auto result = chain_algorithm(net, shortest_path(net, zero, rho));
  if (!std::holds_alternative<PanEntry>(result)) {
    o.fail("chain stuck on (0, r)");
    return o;
  }
  const PanEntry& base = std::get<PanEntry>(result);
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(net.size() - 1));
  json moved_all = json::array();
  for (int trial = 0; trial < 10; ++trial) {
    const NodeId u = pick(rng);
    const NodeId target = net.index_of(net.node(u) + kRho);
    const NodeId shift = net.index_of(-net.node(u));
    for (std::size_t i = 0; i < base.paths.size(); ++i) {
      const Path moved = translate(net, base.paths[i], shift);
      if (!validate_path(net, moved, u, target, base.lengths[i])) {
        o.fail("translate by " + format_compact(net.node(u)) + " broke length " + std::to_string(base.lengths[i]));
      }
      if (i + 1 == base.paths.size()) moved_all.push_back(path_json(moved));
    }
  }
  o.artifact = moved_all;
  if (o.pass) o.detail = "10 pairs x " + std::to_string(base.paths.size()) + " paths valid (EJ(3,4))";
  return o;
}

Outcome pancyclicity() {
  Outcome o;
  const EJNetwork net = EJNetwork::build(Generator(2, 3));
  std::size_t edges = 0;
  json last = json::array();
  for (NodeId s = 0; s < net.size(); ++s) {
    for (const NodeId d : net.neighbors(s)) {
      if (d < s) continue;
      ++edges;
      try {
        const auto cycles = pancycles(net, s, d);
        bool ok = cycles.size() == net.size() - 2;
        for (std::size_t i = 0; ok && i < cycles.size(); ++i) {
          ok = cycles[i].length() == i + 3 && validate_cycle(net, cycles[i]);
        }
        if (!ok) o.fail("edge (" + std::to_string(s) + ", " + std::to_string(d) + ")");
        if (!cycles.empty()) last.push_back(json(cycles.back().nodes));
      } catch (const ChainStuck& e) {
        o.fail(e.what());
      }
    }
  }
  o.artifact = last;
  if (o.pass) o.detail = std::to_string(edges) + " edges, cycles 3..19 each, last Hamiltonian";
  return o;
}

Outcome complexity_trend() {
  Outcome o;
  const std::vector<Generator> alphas{Generator(2, 3), Generator(3, 4), Generator(4, 5), Generator(5, 6),
                                      Generator(6, 7)};
  const auto rows = cli::run_bench(alphas, 3, {1, PathRetention::kLengthsOnly});
  const auto slope = cli::fit_loglog_slope(rows);
  std::ostringstream detail;
  for (const auto& r : rows) {
    detail << "n=" << r.n << ":" << r.seconds << "s ";
    if (!r.succeeded) o.fail("sweep failed at n=" + std::to_string(r.n));
  }
  if (!slope || *slope < 3.0 || *slope > 5.0) {
    o.fail("slope " + (slope ? std::to_string(*slope) : std::string("n/a")) + " outside [3, 5]; " + detail.str());
  }
  if (o.pass) o.detail = "slope " + std::to_string(*slope) + "; " + detail.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> deterministic{
      {1, "reference chain r -> 1 in 2+3r", 1.0, table1_chain},
      {2, "reference path fixture", 1.0, table1_fixture},
      {3, "all-pairs panconnectivity 2+3r, 3+4r, 4+5r", 60.0, sweep_desk_scale},
      {4, "oracle equivalence 1+2r, 2+2r", 120.0, oracle_equivalence},
      {5, "structural invariants", 10.0, structural_invariants},
      {6, "common-neighbor pairs", 5.0, common_neighbor_pairs},
      {7, "translation transport", 5.0, translation_transport},
      {8, "pancyclicity through every edge of 2+3r", 30.0, pancyclicity},
  };
  const Criterion bench{9, "complexity trend", 300.0, complexity_trend};

  int failures = 0;
  auto report = [&](const Criterion& c, const Outcome& o, double seconds) {
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::string detail = o.detail;
    if (!in_time) detail += " [over time limit " + std::to_string(c.limit_seconds) + " s]";
    std::printf("[%s] %2d. %s (%.3f s): %s\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                detail.c_str());
    std::fflush(stdout);
  };

  auto timed = [](const Criterion& c, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
  };

  std::vector<std::string> first_run;
  for (const Criterion& c : deterministic) {
    double seconds = 0;
    const Outcome o = timed(c, seconds);
    first_run.push_back(o.artifact.dump());
    report(c, o, seconds);
  }
  {
    double seconds = 0;
    const Outcome o = timed(bench, seconds);
    report(bench, o, seconds);
  }

  // Criterion 10: rerun 1-8 and compare serialized outputs byte for byte.
  Outcome det;
  const auto start = std::chrono::steady_clock::now();
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < deterministic.size(); ++i) {
    const std::string again = deterministic[i].run().artifact.dump();
    bytes += again.size();
    if (again != first_run[i]) det.fail("criterion " + std::to_string(deterministic[i].number) + " output differs");
  }
  if (det.pass) det.detail = "two runs identical (" + std::to_string(bytes) + " bytes of JSON)";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(Criterion{10, "determinism", 1e9, nullptr}, det, seconds);

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
