#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "vcst/exact.hpp"
#include "vcst/nws_pd.hpp"
#include "vcst/reductions.hpp"

using namespace vcst;
using namespace testutil;

namespace {

Graph weighted_path(std::vector<Fixed> ws) {
  GraphData d;
  d.n = static_cast<int>(ws.size());
  for (int i = 0; i + 1 < d.n; ++i) d.edges.push_back({i, i + 1});
  d.weights = std::move(ws);
  return Graph(std::move(d));
}

// Path 0-1-2-3 over levels {0, 1}: the middle edge is alive at every level
// pair, the outer edges only when both endpoints sit at level one.
ActivationInstance two_level_path() {
  GraphData d;
  d.n = 4;
  d.edges = {{0, 1}, {1, 2}, {2, 3}};
  d.weights.assign(4, Fixed::from_int(1));
  Graph g(std::move(d));
  std::vector<Fixed> levels{Fixed::from_int(0), Fixed::from_int(1)};
  std::vector<std::vector<std::uint64_t>> tables = {
      {0b00, 0b10}, {0b11, 0b11}, {0b00, 0b10}};
  return ActivationInstance(std::move(g), {0, 2, 3}, std::move(levels),
                            std::move(tables));
}

// Random connected induced subgraph of a rows x cols grid with small
// integer weights; planar by construction.
VcstInstance random_grid_vcst(Rng& rng, int rows, int cols, int target,
                              int terminal_count) {
  const int total = rows * cols;
  std::vector<char> in(total, 0);
  std::vector<int> frontier{static_cast<int>(rng.below(total))};
  std::vector<int> cells;
  while (static_cast<int>(cells.size()) < target && !frontier.empty()) {
    std::size_t i = rng.below(frontier.size());
    int v = frontier[i];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
    if (in[v]) continue;
    in[v] = 1;
    cells.push_back(v);
    int r = v / cols, c = v % cols;
    if (r > 0) frontier.push_back(v - cols);
    if (r + 1 < rows) frontier.push_back(v + cols);
    if (c > 0) frontier.push_back(v - 1);
    if (c + 1 < cols) frontier.push_back(v + 1);
  }
  std::sort(cells.begin(), cells.end());
  const int n = static_cast<int>(cells.size());
  std::vector<int> newid(total, -1);
  for (int i = 0; i < n; ++i) newid[cells[i]] = i;
  GraphData d;
  d.n = n;
  for (int v : cells) {
    int r = v / cols, c = v % cols;
    if (c + 1 < cols && newid[v + 1] >= 0)
      d.edges.push_back({newid[v], newid[v + 1]});
    if (r + 1 < rows && newid[v + cols] >= 0)
      d.edges.push_back({newid[v], newid[v + cols]});
  }
  for (int i = 0; i < n; ++i)
    d.weights.push_back(Fixed::from_int(rng.range(1, 4)));
  Graph g(std::move(d));
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(verts[i], verts[rng.below(i + 1)]);
  verts.resize(std::max(1, std::min(terminal_count, n)));
  std::sort(verts.begin(), verts.end());
  return VcstInstance(std::move(g), std::move(verts));
}

// Recount the debt edges straight from the adjacency lists.
int recount_debt_edges(const Graph& g, const DebtGraph& dg,
                       const std::vector<int>& snapshot_x,
                       const std::vector<int>& xbar) {
  std::vector<char> in_x(g.n(), 0), in_aug(g.n(), 0);
  for (int v : snapshot_x) in_x[v] = 1;
  for (int v : xbar)
    if (!in_x[v]) in_aug[v] = 1;
  int count = 0;
  for (const auto& y : dg.active_sets) {
    std::set<int> contact;
    for (int u : y)
      for (int w : g.neighbors(u))
        if (in_aug[w]) contact.insert(w);
    count += static_cast<int>(contact.size());
  }
  return count;
}

bool terminals_stay_connected(const Graph& g, const std::vector<int>& xbar,
                              const std::vector<int>& terminals, int dropped) {
  std::vector<char> in(g.n(), 0);
  for (int v : xbar) in[v] = 1;
  in[dropped] = 0;
  std::vector<int> comp = component_of(g, in, terminals.front());
  for (int t : terminals)
    if (!std::binary_search(comp.begin(), comp.end(), t)) return false;
  return true;
}

}  // namespace

TEST_CASE("primal dual buys the middle vertex of a two-terminal path") {
  Graph g = weighted_path({fx("3"), fx("5"), fx("4")});
  NwsInstance inst(g, {0, 2});
  auto [sol, trace] = solve_nws_pd(inst);

  CHECK(sol.chosen == std::vector<int>{0, 1, 2});
  CHECK(sol.added_weight == fx("5"));
  CHECK(sol.tree.size() == 2);
  CHECK(trace.initial == std::vector<int>{0, 2});
  REQUIRE(trace.events.size() == 1);
  // both singleton sets push on the middle vertex, so it goes tight at
  // half its weight
  CHECK(trace.events[0].vertex == 1);
  CHECK(trace.events[0].time == doctest::Approx(2.5));
  CHECK(trace.events[0].active_sets ==
        std::vector<std::vector<int>>{{0}, {2}});
  CHECK(trace.final_x == std::vector<int>{0, 1, 2});
  CHECK(trace.xbar == std::vector<int>{0, 1, 2});
}

TEST_CASE("a single terminal needs nothing") {
  SUBCASE("positive weights produce no events at all") {
    Graph g = weighted_path({fx("3"), fx("5"), fx("4")});
    auto [sol, trace] = solve_nws_pd(NwsInstance(g, {1}));
    CHECK(sol.chosen == std::vector<int>{1});
    CHECK(sol.tree.empty());
    CHECK(sol.added_weight == fx("0"));
    CHECK(trace.events.empty());
  }
  SUBCASE("free vertices are absorbed and then stripped again") {
    Graph g = weighted_path({fx("0"), fx("5"), fx("0")});
    auto [sol, trace] = solve_nws_pd(NwsInstance(g, {1}));
    REQUIRE(trace.events.size() == 2);
    CHECK(trace.events[0].vertex == 0);
    CHECK(trace.events[1].vertex == 2);
    CHECK(trace.events[0].time == 0.0);
    CHECK(trace.events[1].time == 0.0);
    CHECK(trace.final_x == std::vector<int>{0, 1, 2});
    CHECK(sol.chosen == std::vector<int>{1});
    CHECK(sol.added_weight == fx("0"));
  }
}

TEST_CASE("terminals that cannot be connected raise infeasible") {
  SUBCASE("two components") {
    GraphData d;
    d.n = 4;
    d.edges = {{0, 1}, {2, 3}};
    d.weights.assign(4, Fixed::from_int(1));
    NwsInstance inst(Graph(std::move(d)), {0, 3});
    CHECK_THROWS_AS(solve_nws_pd(inst), InfeasibleError);
  }
  SUBCASE("an unbuyable cut vertex") {
    Graph g = weighted_path({fx("1"), Fixed::infinity(), fx("1")});
    CHECK_THROWS_AS(solve_nws_pd(NwsInstance(g, {0, 2})), InfeasibleError);
  }
}

TEST_CASE("the growth trace of a two-level activation path is exact") {
  ActivationInstance inst = two_level_path();
  NwsReduction red = reduce_activation_to_nws(inst);
  const Graph& rg = red.instance.graph;

  // anchors 0..2 for terminals {0, 2, 3}, then two copies per vertex
  REQUIRE(rg.n() == 11);
  CHECK(red.origin_vertex ==
        std::vector<int>{0, 2, 3, 0, 0, 1, 1, 2, 2, 3, 3});
  CHECK(red.origin_level ==
        std::vector<int>{-1, -1, -1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(red.instance.terminals == std::vector<int>{0, 1, 2});
  for (int v : {3, 5, 7, 9}) CHECK(rg.weight(v) == fx("0"));
  for (int v : {4, 6, 8, 10}) CHECK(rg.weight(v) == fx("1"));

  auto [sol, trace] = solve_nws_pd(red.instance);

  // the free level-zero copies join at time zero, then the four level-one
  // copies go tight together at time one
  std::vector<int> order, counts;
  std::vector<double> times;
  for (const PdEvent& e : trace.events) {
    order.push_back(e.vertex);
    times.push_back(e.time);
    counts.push_back(static_cast<int>(e.active_sets.size()));
  }
  CHECK(order == std::vector<int>{3, 5, 7, 9, 4, 6, 8, 10});
  CHECK(times == std::vector<double>{0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(counts == std::vector<int>{3, 3, 3, 3, 3, 3, 2, 2});
  CHECK(trace.events[0].active_sets ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(trace.events[4].active_sets ==
        std::vector<std::vector<int>>{{0, 3}, {1, 5, 7}, {2, 9}});

  // reverse deletion strips exactly the level-zero copies
  CHECK(trace.final_x == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(trace.xbar == std::vector<int>{0, 1, 2, 4, 6, 8, 10});
  CHECK(sol.added_weight == fx("4"));
  std::vector<int> expected_tree;
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 4}, {4, 6}, {6, 8}, {1, 8}, {8, 10}, {2, 10}}) {
    expected_tree.push_back(rg.edge_id(u, v).value());
  }
  std::sort(expected_tree.begin(), expected_tree.end());
  CHECK(sol.tree == expected_tree);

  // trace json round-trips the event list
  nlohmann::json j = nlohmann::json::parse(trace.to_json());
  REQUIRE(j["events"].size() == 8);
  CHECK(j["events"][4]["vertex"] == 4);
  CHECK(j["events"][4]["time"] == 1.0);
  CHECK(j["events"][4]["active_sets"] == 3);
  CHECK(j["xbar"] == std::vector<int>{0, 1, 2, 4, 6, 8, 10});

  // lifting the tree gives the level-one assignment, which is optimal here
  ActivationLift lift = lift_nws_to_activation(inst, red, sol.tree);
  CHECK_FALSE(lift.not_minimal);
  CHECK_FALSE(lift.multi_copy);
  CHECK_FALSE(lift.level_floor);
  CHECK(lift.solution.level_of == std::vector<int>{1, 1, 1, 1});
  CHECK(lift.solution.objective == fx("4"));
  ActivationSolution direct = solve_activation_minor_free(inst);
  CHECK(direct.level_of == lift.solution.level_of);
  CHECK(direct.objective == fx("4"));
}

TEST_CASE("the debt graph of a mid-run snapshot matches the hand count") {
  ActivationInstance inst = two_level_path();
  NwsReduction red = reduce_activation_to_nws(inst);
  auto [sol, trace] = solve_nws_pd(red.instance);

  // four free vertices in, X = {anchors, 3, 5, 7, 9}
  std::vector<int> snap = trace.snapshot(4);
  CHECK(snap == std::vector<int>{0, 1, 2, 3, 5, 7, 9});
  DebtGraph dg = build_debt_graph(red, snap, trace.xbar);
  CHECK(dg.active_sets ==
        std::vector<std::vector<int>>{{0, 3}, {1, 5, 7}, {2, 9}});
  CHECK(dg.edges == std::vector<std::pair<int, int>>{
                        {0, 4}, {1, 6}, {1, 8}, {2, 10}});
  CHECK(dg.b == std::vector<int>{4, 6, 8, 10});
  // every member of B shadows a level-zero copy inside an active set
  CHECK(dg.b_prime == std::vector<int>{4, 6, 8, 10});
  CHECK(recount_debt_edges(red.instance.graph, dg, snap, trace.xbar) ==
        static_cast<int>(dg.edges.size()));

  // condensing the middle set keeps the anchor and swaps both copies for
  // their B counterparts; carving splits it at the two marked vertices
  CHECK(condense_active_set(red, {1, 5, 7}, dg.b) ==
        std::vector<int>{1, 6, 8});
  CHECK(carve_connected_pieces(red.instance.graph, {1, 6, 8}, {6, 8}) ==
        std::vector<std::vector<int>>{{6}, {1, 8}});
  CHECK_THROWS_AS(carve_connected_pieces(red.instance.graph, {1, 6, 8}, {}),
                  InvalidInstanceError);
  CHECK_THROWS_AS(
      carve_connected_pieces(red.instance.graph, {1, 6, 8}, {6, 9}),
      InvalidInstanceError);

  DebtReport rep = check_debt_bounds(red, trace, true);
  CHECK(rep.all_ok());
  REQUIRE(rep.rows.size() == trace.events.size() + 1);
  CHECK(rep.rows[4].edges == 4);
  CHECK(rep.rows[4].num_active == 3);
  CHECK(rep.rows[4].b_size == 4);
  CHECK(rep.rows[4].b_prime_size == 4);
  CHECK(rep.gamma_max == doctest::Approx(4.0 / 3.0));
  // at termination one active set remains and nothing is left to connect
  CHECK(rep.rows.back().num_active == 1);
  CHECK(rep.rows.back().edges == 0);
  CHECK(rep.rows.back().b_size == 0);

  CHECK_THROWS_AS(build_debt_graph(red, {0, 1}, trace.xbar),
                  InvalidInstanceError);
  CHECK_THROWS_AS(build_debt_graph(red, snap, {0, 1, 2}),
                  InvalidInstanceError);
  CHECK_THROWS_AS(trace.snapshot(-1), InvalidInstanceError);
  CHECK_THROWS_AS(trace.snapshot(9), InvalidInstanceError);
}

TEST_CASE("weight-zero vertices join at time zero on reduced instances") {
  Rng rng(86420);
  for (int round = 0; round < 12; ++round) {
    VcstInstance base =
        random_udg(rng, 5 + static_cast<int>(rng.below(3)), 2'500'000,
                   1'000'000, 3'000'000, 2 + static_cast<int>(rng.below(2)));
    NwsReduction red =
        reduce_activation_to_nws(encode_vcst_as_activation(base));
    const Graph& rg = red.instance.graph;
    auto [sol, trace] = solve_nws_pd(red.instance);

    std::vector<int> free_vertices;
    for (int v = 0; v < rg.n(); ++v) {
      bool terminal = std::binary_search(red.instance.terminals.begin(),
                                         red.instance.terminals.end(), v);
      if (!terminal && rg.weight(v) == fx("0")) free_vertices.push_back(v);
    }
    REQUIRE(trace.events.size() >= free_vertices.size());
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
      CHECK(trace.events[i].vertex == free_vertices[i]);
      CHECK(trace.events[i].time == 0.0);
    }
    for (std::size_t i = free_vertices.size(); i < trace.events.size(); ++i) {
      CHECK(trace.events[i].time > 0.0);
    }
    // times never run backwards and active sets only ever merge
    for (std::size_t i = 1; i < trace.events.size(); ++i) {
      CHECK(trace.events[i].time >= trace.events[i - 1].time);
      CHECK(trace.events[i].active_sets.size() <=
            trace.events[i - 1].active_sets.size());
    }
  }
}

TEST_CASE("kept vertices are individually necessary on random graphs") {
  Rng rng(13579);
  for (int round = 0; round < 20; ++round) {
    int n = 6 + static_cast<int>(rng.below(7));
    VcstInstance base =
        random_udg(rng, n, 2'500'000, 1'000'000, 3'000'000,
                   2 + static_cast<int>(rng.below(3)));
    NwsInstance inst(base.graph, base.terminals);
    auto [sol, trace] = solve_nws_pd(inst);
    CHECK(validate_nws_solution(inst, sol).ok);

    // X grows by exactly one vertex per event
    for (std::size_t k = 0; k <= trace.events.size(); ++k) {
      CHECK(trace.snapshot(static_cast<int>(k)).size() ==
            inst.terminals.size() + k);
    }
    // dropping any bought vertex disconnects the terminals
    for (int v : sol.chosen) {
      if (std::binary_search(inst.terminals.begin(), inst.terminals.end(), v))
        continue;
      CHECK_FALSE(
          terminals_stay_connected(inst.graph, sol.chosen, inst.terminals, v));
    }
    NwsSolution exact = solve_nws_exact(inst);
    CHECK(sol.added_weight >= exact.added_weight);

    auto [again, trace2] = solve_nws_pd(inst);
    CHECK(again.chosen == sol.chosen);
    CHECK(again.tree == sol.tree);
    CHECK(trace2.to_json() == trace.to_json());
  }
}

TEST_CASE("planar instances stay within the certified factor and debt bounds") {
  Rng rng(24680);
  for (int round = 0; round < 100; ++round) {
    int rows = 2 + static_cast<int>(rng.below(2));
    int cols = 3 + static_cast<int>(rng.below(2));
    int target = 5 + static_cast<int>(rng.below(5));
    VcstInstance base = random_grid_vcst(rng, rows, cols, target,
                                         2 + static_cast<int>(rng.below(2)));
    ActivationInstance act = encode_vcst_as_activation(base);
    ActivationSolution approx = solve_activation_minor_free(act);
    CHECK(validate_activation_solution(act, approx).ok);

    VcstSolution exact = solve_vcst_exact(base);
    CHECK(approx.objective >= exact.objective);
    CHECK(approx.objective.to_double() <=
          11.0 * exact.objective.to_double() + 1e-9);

    NwsReduction red = reduce_activation_to_nws(act);
    auto [sol, trace] = solve_nws_pd(red.instance);
    DebtReport rep = check_debt_bounds(red, trace, true);
    CHECK(rep.planar_bounds_ok);
    CHECK(rep.copies_unique);
    CHECK(rep.copy_disjoint);
    ActivationLift lift = lift_nws_to_activation(act, red, sol.tree);
    CHECK_FALSE(lift.not_minimal);
    CHECK_FALSE(lift.multi_copy);
  }

  // a lone terminal lifts to the all-zero assignment
  Rng rng2(1);
  VcstInstance lone = random_grid_vcst(rng2, 2, 3, 5, 1);
  ActivationInstance act = encode_vcst_as_activation(lone);
  ActivationSolution sol = solve_activation_minor_free(act);
  CHECK(sol.objective == fx("0"));
  for (int lv : sol.level_of) CHECK(lv == 0);
}
