#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "vcst/exact.hpp"
#include "vcst/reductions.hpp"

using namespace vcst;
using namespace testutil;

namespace {

// Optimum of an activation instance by enumerating every level assignment;
// returns infinity when no assignment connects the terminals.
Fixed brute_force_activation(const ActivationInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.n();
  const int L = static_cast<int>(inst.levels.size());
  std::vector<int> idx(n, 0);
  Fixed best = Fixed::infinity();
  while (true) {
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edge(e);
      if (inst.active(e, idx[u], idx[v])) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{inst.terminals[0]};
    seen[inst.terminals[0]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    bool ok = true;
    for (int t : inst.terminals) ok = ok && seen[t];
    if (ok) {
      Fixed total;
      for (int v = 0; v < n; ++v) total += inst.levels[idx[v]];
      best = min(best, total);
    }
    int p = 0;
    while (p < n && ++idx[p] == L) {
      idx[p] = 0;
      ++p;
    }
    if (p == n) break;
  }
  return best;
}

// Random activation instance on a connected sparse graph with arbitrary
// monotone tables (bits drawn at random, then closed upward).
ActivationInstance random_activation(Rng& rng, int n, int L,
                                     bool include_zero) {
  GraphData d;
  d.n = n;
  d.weights.assign(n, Fixed());
  for (int v = 1; v < n; ++v)
    d.edges.push_back({static_cast<int>(rng.below(v)), v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!std::count(d.edges.begin(), d.edges.end(), Edge{u, v}) &&
          rng.below(4) == 0)
        d.edges.push_back({u, v});
  Graph g(std::move(d));

  std::vector<Fixed> levels;
  for (int i = 0; i < L; ++i)
    levels.push_back(Fixed::from_int(include_zero ? i : i + 1));

  const std::uint64_t all_bits = (1ull << L) - 1;
  std::vector<std::vector<std::uint64_t>> tables(g.m());
  for (auto& table : tables) {
    table.assign(L, 0);
    for (int a = 0; a < L; ++a) {
      std::uint64_t row = rng.next() & all_bits & rng.next();
      for (int b = 0; b < L - 1; ++b) row |= (row << 1) & all_bits;
      table[a] = row | (a > 0 ? table[a - 1] : 0);
    }
  }

  int nt = 1 + static_cast<int>(rng.below(n));
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<int> terminals(order.begin(), order.begin() + nt);
  std::sort(terminals.begin(), terminals.end());
  return ActivationInstance(std::move(g), std::move(terminals),
                            std::move(levels), std::move(tables));
}

}  // namespace

TEST_CASE("activation encoding of uniform weights uses levels {0,1}") {
  VcstInstance inst(path_graph(3), {0, 2});
  ActivationInstance act = encode_vcst_as_activation(inst);
  REQUIRE(act.levels == std::vector<Fixed>{Fixed(), Fixed::from_int(1)});
  for (int e = 0; e < act.graph.m(); ++e) {
    CHECK_FALSE(act.active(e, 0, 0));
    CHECK(act.active(e, 0, 1));
    CHECK(act.active(e, 1, 0));
    CHECK(act.active(e, 1, 1));
  }
}

TEST_CASE("activation encoding optimum matches the cover optimum") {
  Rng rng(510);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 3 + static_cast<int>(rng.below(4));
    VcstInstance inst = random_udg(rng, n, 2'200'000, 0, 4'000'000,
                                   1 + static_cast<int>(rng.below(n)));
    ActivationInstance act = encode_vcst_as_activation(inst);
    CHECK(brute_force_activation(act) == solve_vcst_exact(inst).objective);
  }
}

TEST_CASE("copy graph of a single edge with both ends terminal") {
  VcstInstance inst(path_graph(2), {0, 1});
  ActivationInstance act = encode_vcst_as_activation(inst);  // levels {0,1}
  NwsReduction red = reduce_activation_to_nws(act);
  const Graph& rg = red.instance.graph;

  // two anchors plus two copies per vertex
  REQUIRE(rg.n() == 6);
  CHECK(red.instance.terminals == std::vector<int>{0, 1});
  CHECK(rg.weight(0) == Fixed());
  CHECK(rg.weight(1) == Fixed());
  std::vector<std::vector<int>> copy(2, std::vector<int>(2, -1));
  for (int r = 2; r < 6; ++r) {
    REQUIRE(red.origin_level[r] >= 0);
    copy[red.origin_vertex[r]][red.origin_level[r]] = r;
    CHECK(rg.weight(r) == act.levels[red.origin_level[r]]);
  }
  // anchors see exactly their own copies
  for (int t = 0; t < 2; ++t) {
    CHECK(rg.degree(t) == static_cast<int>(act.levels.size()));
    for (int a = 0; a < 2; ++a) CHECK(rg.has_edge(t, copy[t][a]));
  }
  // copy edges follow the activation table: (0,0) is inactive, the rest fire
  CHECK_FALSE(rg.has_edge(copy[0][0], copy[1][0]));
  CHECK(rg.has_edge(copy[0][0], copy[1][1]));
  CHECK(rg.has_edge(copy[0][1], copy[1][0]));
  CHECK(rg.has_edge(copy[0][1], copy[1][1]));
}

TEST_CASE("reduction with the zero level only mirrors the original graph") {
  GraphData d;
  d.n = 4;
  d.weights.assign(4, Fixed());
  d.edges = {{0, 1}, {1, 2}, {2, 3}};
  Graph g(std::move(d));
  std::vector<std::vector<std::uint64_t>> tables(3, {1ull});  // f(0,0) holds
  ActivationInstance act(std::move(g), {0, 3}, {Fixed()}, std::move(tables));
  NwsReduction red = reduce_activation_to_nws(act);
  const Graph& rg = red.instance.graph;

  REQUIRE(rg.n() == 6);  // 2 anchors + one copy per vertex
  std::vector<int> copy(4, -1);
  for (int r = 0; r < 6; ++r)
    if (red.origin_level[r] == 0) copy[red.origin_vertex[r]] = r;
  for (int v = 0; v + 1 < 4; ++v) CHECK(rg.has_edge(copy[v], copy[v + 1]));
  CHECK(rg.m() == 2 + 3);  // anchor edges plus the mirrored path
}

TEST_CASE("copies that can never activate an edge are dropped") {
  GraphData d;
  d.n = 2;
  d.weights.assign(2, Fixed());
  d.edges = {{0, 1}};
  Graph g(std::move(d));
  // levels {0,3,5}; the edge needs the non-terminal side at level 5
  std::vector<std::vector<std::uint64_t>> tables{{0b100, 0b100, 0b100}};
  ActivationInstance act(std::move(g), {0},
                         {Fixed(), Fixed::from_int(3), Fixed::from_int(5)},
                         std::move(tables));
  NwsReduction red = reduce_activation_to_nws(act);

  // anchor + all three copies of terminal 0 + copies {0, 5} of vertex 1
  REQUIRE(red.instance.graph.n() == 6);
  std::set<std::pair<int, int>> copies;
  for (std::size_t r = 0; r < red.origin_vertex.size(); ++r)
    if (red.origin_level[r] >= 0)
      copies.insert({red.origin_vertex[r], red.origin_level[r]});
  CHECK(copies.count({1, 2}) == 1);
  CHECK(copies.count({1, 0}) == 1);
  CHECK(copies.count({1, 1}) == 0);  // level 3 never fires
}

TEST_CASE("lifting a tree assigns each vertex its highest used copy") {
  VcstInstance inst(path_graph(2), {0, 1});
  ActivationInstance act = encode_vcst_as_activation(inst);
  NwsReduction red = reduce_activation_to_nws(act);
  const Graph& rg = red.instance.graph;
  std::vector<std::vector<int>> copy(2, std::vector<int>(2, -1));
  for (int r = 2; r < 6; ++r)
    copy[red.origin_vertex[r]][red.origin_level[r]] = r;

  // anchor0 - 0_1 - 1_0 - anchor1: vertex 0 pays level 1, vertex 1 nothing
  std::vector<int> tree{*rg.edge_id(0, copy[0][1]),
                        *rg.edge_id(copy[0][1], copy[1][0]),
                        *rg.edge_id(1, copy[1][0])};
  ActivationLift lift = lift_nws_to_activation(act, red, tree);
  CHECK_FALSE(lift.not_minimal);
  CHECK_FALSE(lift.multi_copy);
  CHECK_FALSE(lift.level_floor);
  CHECK(lift.solution.level_of == std::vector<int>{1, 0});
  CHECK(lift.solution.objective == Fixed::from_int(1));
  CHECK(validate_activation_solution(act, lift.solution).ok);

  // adding 1_1 as an extra leaf flags both warnings but keeps the bound
  std::vector<int> bigger = tree;
  bigger.push_back(*rg.edge_id(1, copy[1][1]));
  ActivationLift warned = lift_nws_to_activation(act, red, bigger);
  CHECK(warned.not_minimal);
  CHECK(warned.multi_copy);
  CHECK(warned.solution.level_of == std::vector<int>{1, 1});
  CHECK(warned.solution.objective <= Fixed::from_int(2));
  CHECK(validate_activation_solution(act, warned.solution).ok);

  // a tree that misses an anchor is rejected
  std::vector<int> partial{tree[0]};
  CHECK_THROWS_AS(lift_nws_to_activation(act, red, partial),
                  InvalidInstanceError);
}

TEST_CASE("minimal trees in the copy graph lift to matching objectives") {
  Rng rng(611);
  int accepted = 0, minimal_seen = 0;
  while (accepted < 12) {
    int n = 3 + static_cast<int>(rng.below(2));
    int L = 2 + static_cast<int>(rng.below(2));
    bool include_zero = rng.below(5) != 0;
    ActivationInstance act = random_activation(rng, n, L, include_zero);
    NwsReduction red = reduce_activation_to_nws(act);
    const Graph& rg = red.instance.graph;
    if (rg.n() > 13) continue;
    ++accepted;

    const int nt = static_cast<int>(red.instance.terminals.size());
    Fixed best_tree = Fixed::infinity();
    for (std::uint32_t pick = 0; pick < (1u << (rg.n() - nt)); ++pick) {
      std::vector<int> verts;
      for (int r = 0; r < nt; ++r) verts.push_back(r);
      for (int i = 0; i < rg.n() - nt; ++i)
        if ((pick >> i) & 1u) verts.push_back(nt + i);
      for_each_spanning_tree(rg, verts, [&](const std::vector<int>& tree) {
        // inclusion-minimal Steiner trees have anchors for leaves
        std::map<int, int> deg;
        for (int e : tree) {
          auto [u, v] = rg.edge(e);
          ++deg[u];
          ++deg[v];
        }
        for (const auto& [r, dg] : deg)
          if (dg == 1 && r >= nt) return;
        ++minimal_seen;
        ActivationLift lift = lift_nws_to_activation(act, red, tree);
        CHECK_FALSE(lift.not_minimal);
        CHECK(validate_activation_solution(act, lift.solution).ok);
        Fixed tree_weight = weight_sum(rg, tree_vertices(rg, tree));
        if (!lift.multi_copy && !lift.level_floor)
          CHECK(lift.solution.objective == tree_weight);
        else if (!lift.level_floor)
          CHECK(lift.solution.objective <= tree_weight);
        best_tree = min(best_tree, tree_weight);
      });
    }
    if (include_zero) {
      // the cheapest minimal tree matches the brute-force optimum
      CHECK(best_tree == brute_force_activation(act));
    }
  }
  CHECK(minimal_seen > 0);
}

TEST_CASE("solving the reduced instance recovers the activation optimum") {
  Rng rng(612);
  int done = 0;
  while (done < 50) {
    int n = 3 + static_cast<int>(rng.below(3));
    int L = 2 + static_cast<int>(rng.below(2));
    ActivationInstance act = random_activation(rng, n, L, true);
    NwsReduction red = reduce_activation_to_nws(act);
    if (red.instance.graph.n() > 20) continue;
    ++done;
    Fixed brute = brute_force_activation(act);
    if (brute.is_infinite()) {
      CHECK_THROWS_AS(solve_nws_exact(red.instance), InfeasibleError);
      continue;
    }
    NwsSolution nws = solve_nws_exact(red.instance);
    std::vector<char> keep(red.instance.graph.n(), 0);
    for (int t : red.instance.terminals) keep[t] = 1;
    std::vector<int> pruned =
        prune_tree_leaves(red.instance.graph, nws.tree, keep);
    ActivationLift lift = lift_nws_to_activation(act, red, pruned);
    CHECK_FALSE(lift.not_minimal);
    CHECK(validate_activation_solution(act, lift.solution).ok);
    CHECK(lift.solution.objective == brute);
    CHECK(nws.added_weight == brute);
  }
}

TEST_CASE("domination lengths take the lighter endpoint") {
  GraphData d;
  d.n = 3;
  d.weights = {Fixed::from_int(3), Fixed::from_int(5), Fixed::from_int(1)};
  d.edges = {{0, 1}, {1, 2}};
  VcstInstance inst(Graph(std::move(d)), {0, 2});
  CdsInstance cds = reduce_vcst_to_cds(inst);
  CHECK(cds.graph.length(0) == Fixed::from_int(3));
  CHECK(cds.graph.length(1) == Fixed::from_int(1));

  VcstInstance uniform(path_graph(4), {0, 3});
  CdsInstance ucds = reduce_vcst_to_cds(uniform);
  for (int e = 0; e < ucds.graph.m(); ++e)
    CHECK(ucds.graph.length(e) == Fixed::from_int(1));
}

TEST_CASE("domination optimum is sandwiched by the cover optimum") {
  // with a single terminal the cover optimum is zero (empty tree) while
  // domination still costs a vertex, so the sandwich needs two terminals
  Rng rng(713);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 4 + static_cast<int>(rng.below(5));
    VcstInstance inst = random_udg(rng, n, 2'400'000, 200'000, 5'000'000,
                                   2 + static_cast<int>(rng.below(n - 1)));
    Fixed vc = solve_vcst_exact(inst).objective;
    Fixed cd = solve_cds_exact(reduce_vcst_to_cds(inst)).objective;
    CHECK(vc <= cd);
    CHECK(static_cast<__int128>(cd.units()) <=
          static_cast<__int128>(30) * vc.units());
  }
}

TEST_CASE("domination solutions lift to cover solutions") {
  Rng rng(714);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 4 + static_cast<int>(rng.below(6));
    VcstInstance inst = random_udg(rng, n, 2'400'000, 0, 5'000'000,
                                   1 + static_cast<int>(rng.below(n)));
    CdsSolution cds = solve_cds_exact(reduce_vcst_to_cds(inst));
    if (inst.terminals.size() == 1) {
      VcstSolution lifted = lift_cds_to_vcst(inst, cds);
      CHECK(lifted.tree.empty());
      CHECK(lifted.objective == Fixed());
      continue;
    }
    VcstSolution lifted = lift_cds_to_vcst(inst, cds);
    CHECK(validate_vcst_solution(inst, lifted).ok);
    CHECK(lifted.objective <= cds.objective);
  }
}

TEST_CASE("a dominating tree that spans every terminal needs no attachments") {
  VcstInstance inst(path_graph(3), {0, 1, 2});
  CdsSolution cds;
  cds.domset = {0, 1, 2};
  cds.tree = {0, 1};
  cds.objective = Fixed::from_int(3) + Fixed::from_int(2);  // weights + lengths
  VcstSolution lifted = lift_cds_to_vcst(inst, cds);
  CHECK(lifted.tree == cds.tree);
  // the cover keeps all of S plus the lighter endpoint of every tree edge
  CHECK(lifted.cover == std::vector<int>{0, 1, 2});
  CHECK(lifted.objective == Fixed::from_int(3));

  CdsSolution bogus;
  bogus.domset = {0};
  bogus.objective = Fixed::from_int(1);
  CHECK_THROWS_AS(lift_cds_to_vcst(inst, bogus), InvalidInstanceError);
}

TEST_CASE("set-cover gadget structure") {
  SetCoverGadget gadget = gadget_from_set_cover(3, {{0, 1}, {1, 2}});
  const Graph& g = gadget.instance.graph;
  CHECK(g.n() == 5);
  CHECK(g.m() == 5);  // four incidences plus one clique edge
  CHECK(g.has_edge(gadget.set_vertex(0), gadget.set_vertex(1)));
  CHECK(gadget.instance.terminals.size() == 5);  // spanning variant
  for (int v = 0; v < g.n(); ++v) CHECK(g.weight(v) == Fixed::from_int(1));

  CHECK_THROWS_AS(gadget_from_set_cover(3, {{0, 1}}), InvalidInstanceError);
}

TEST_CASE("set-cover gadget optimum equals the best cover size") {
  Rng rng(815);
  for (int iter = 0; iter < 25; ++iter) {
    int universe = 2 + static_cast<int>(rng.below(4));
    int k = 2 + static_cast<int>(rng.below(3));
    std::vector<std::vector<int>> family(k);
    for (int el = 0; el < universe; ++el)
      family[rng.below(k)].push_back(el);  // guarantee coverage
    for (auto& set : family)
      for (int el = 0; el < universe; ++el)
        if (rng.below(3) == 0 && !std::count(set.begin(), set.end(), el))
          set.push_back(el);
    SetCoverGadget gadget = gadget_from_set_cover(universe, family);

    std::vector<WeightedSet> weighted;
    for (const auto& set : gadget.family)
      weighted.push_back({set, Fixed::from_int(1)});
    SetCoverSolution cover = solve_set_cover_exact(universe, weighted);
    VcstSolution best = solve_vcst_exact(gadget.instance);
    CHECK(best.objective == cover.weight);

    // forward map: equal size, feasible
    VcstSolution mapped = gadget.cover_to_solution(cover.chosen);
    CHECK(validate_vcst_solution(gadget.instance, mapped).ok);
    CHECK(mapped.objective == cover.weight);
    CHECK(mapped.cover.size() == cover.chosen.size());

    // backward map: round-trip and from the solver's own solution
    std::vector<int> back = gadget.solution_to_cover(mapped);
    CHECK(back.size() == cover.chosen.size());
    std::vector<int> from_solver = gadget.solution_to_cover(best);
    CHECK(from_solver.size() <= best.cover.size());
    CHECK(Fixed::from_int(static_cast<int>(from_solver.size())) ==
          cover.weight);
  }
}

TEST_CASE("grid gadget subdivides one edge into a unit path") {
  GraphData d;
  d.n = 2;
  d.weights.assign(2, Fixed());
  d.edges = {{0, 1}};
  d.coords = {pt(0, 0), pt(4, 0)};
  Graph grid(std::move(d));
  GridGadget gadget =
      gadget_subdivide_grid(grid, {fx("2.5")}, {0, 1});
  const Graph& g = gadget.instance.graph;

  REQUIRE(g.n() == 5);
  REQUIRE(g.m() == 4);
  auto [i, j, k] = gadget.subdivision[0];
  CHECK(g.coord(i) == pt(1, 0));
  CHECK(g.coord(j) == pt(2, 0));
  CHECK(g.coord(k) == pt(3, 0));
  CHECK(g.weight(0) == Fixed());
  CHECK(g.weight(1) == Fixed());
  CHECK(g.weight(i).is_infinite());
  CHECK(g.weight(j) == fx("2.5"));
  CHECK(g.weight(k).is_infinite());
  CHECK(g.is_unit_disk());
  CHECK(g.has_edge(0, i));
  CHECK(g.has_edge(i, j));
  CHECK(g.has_edge(j, k));
  CHECK(g.has_edge(k, 1));
}

TEST_CASE("grid gadget rejects malformed grids") {
  // off-lattice point
  {
    GraphData d;
    d.n = 2;
    d.weights.assign(2, Fixed());
    d.edges = {{0, 1}};
    d.coords = {pt(0, 0), pt(3, 0)};
    Graph g(std::move(d));
    CHECK_THROWS_AS(gadget_subdivide_grid(g, {Fixed()}, {0}),
                    InvalidInstanceError);
  }
  // diagonal edge between lattice points
  {
    GraphData d;
    d.n = 2;
    d.weights.assign(2, Fixed());
    d.edges = {{0, 1}};
    d.coords = {pt(0, 0), pt(4, 4)};
    Graph g(std::move(d));
    CHECK_THROWS_AS(gadget_subdivide_grid(g, {Fixed()}, {0}),
                    InvalidInstanceError);
  }
  // no coordinates at all
  CHECK_THROWS_AS(gadget_subdivide_grid(path_graph(2), {Fixed()}, {0}),
                  InvalidInstanceError);
}

namespace {

// Connected random subgraph of a w x h lattice with 4-unit spacing and
// random edge lengths; retries until connected.
Graph random_grid(Rng& rng, int w, int h) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GraphData d;
    d.n = w * h;
    d.weights.assign(d.n, Fixed());
    auto id = [&](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        d.coords.push_back(pt(4 * x, 4 * y));
        if (x + 1 < w && rng.below(4) != 0)
          d.edges.push_back({id(x, y), id(x + 1, y)});
        if (y + 1 < h && rng.below(4) != 0)
          d.edges.push_back({id(x, y), id(x, y + 1)});
      }
    for (std::size_t e = 0; e < d.edges.size(); ++e)
      d.lengths.push_back(Fixed::from_units(rng.range(0, 3'000'000)));
    Graph g(std::move(d));
    if (g.m() > 6) continue;
    std::vector<char> all(g.n(), 1);
    if (is_connected_subset(g, all)) return g;
  }
  throw std::runtime_error("no connected grid found");
}

}  // namespace

TEST_CASE("grid gadget preserves the Steiner optimum") {
  Rng rng(916);
  int full_edges_seen = 0;
  for (int iter = 0; iter < 20; ++iter) {
    int w = 2 + static_cast<int>(rng.below(2));
    int h = 2;
    Graph grid = random_grid(rng, w, h);
    int nt = 1 + static_cast<int>(rng.below(grid.n()));
    std::vector<int> order(grid.n());
    for (int v = 0; v < grid.n(); ++v) order[v] = v;
    for (int i = grid.n() - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(i + 1)]);
    std::vector<int> terminals(order.begin(), order.begin() + nt);
    std::sort(terminals.begin(), terminals.end());

    GridGadget gadget =
        gadget_subdivide_grid(grid, grid.lengths(), terminals);
    VcstSolution sol = solve_vcst_exact(gadget.instance);
    auto [steiner_tree, steiner_len] =
        solve_edge_steiner_exact(grid, terminals);
    CHECK(sol.objective == steiner_len);
    (void)steiner_tree;

    // fully used grid edges put u, v and the midpoint in the cover and
    // never the infinite-weight quarter points
    for (int v : sol.cover) CHECK_FALSE(gadget.instance.graph.weight(v).is_infinite());
    std::set<int> tree(sol.tree.begin(), sol.tree.end());
    const Graph& gg = gadget.instance.graph;
    for (int e = 0; e < grid.m(); ++e) {
      auto [u, v] = grid.edge(e);
      auto [i, j, k] = gadget.subdivision[e];
      bool full = tree.count(*gg.edge_id(u, i)) &&
                  tree.count(*gg.edge_id(i, j)) &&
                  tree.count(*gg.edge_id(j, k)) &&
                  tree.count(*gg.edge_id(k, v));
      if (!full) continue;
      ++full_edges_seen;
      CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), u));
      CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), v));
      CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), j));
    }
  }
  CHECK(full_edges_seen > 0);
}
