#include "vcst/cds_approx.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcst/geometry.hpp"

namespace vcst {
namespace {

constexpr double kTheta = 14.0;

// --- shortest paths ------------------------------------------------------------

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

struct PathTree {
  std::vector<std::int64_t> dist;  // micro-units; kUnreached if no path
  std::vector<int> parent_vertex;
  std::vector<int> parent_edge;
};

// Dijkstra over the finite-length edges, O(n^2) selection.  Deterministic:
// the closest unfinished vertex with the lowest index is settled next, and
// relaxations use strict improvement over edges in ascending id order, so
// parent pointers are reproducible.
PathTree shortest_paths(const Graph& g, const std::vector<Fixed>& lengths,
                        int source,
                        const std::vector<std::vector<int>>& incident) {
  PathTree t;
  t.dist.assign(g.n(), kUnreached);
  t.parent_vertex.assign(g.n(), -1);
  t.parent_edge.assign(g.n(), -1);
  std::vector<char> done(g.n(), 0);
  t.dist[source] = 0;
  for (int round = 0; round < g.n(); ++round) {
    int u = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (done[v] || t.dist[v] == kUnreached) continue;
      if (u == -1 || t.dist[v] < t.dist[u]) u = v;
    }
    if (u == -1) break;
    done[u] = 1;
    for (int e : incident[u]) {
      if (lengths[e].is_infinite()) continue;
      auto [a, b] = g.edge(e);
      int v = a == u ? b : a;
      std::int64_t len = lengths[e].units();
      if (t.dist[u] > kUnreached - 1 - len) continue;  // would overflow
      std::int64_t nd = t.dist[u] + len;
      if (nd < t.dist[v]) {
        t.dist[v] = nd;
        t.parent_vertex[v] = u;
        t.parent_edge[v] = e;
      }
    }
  }
  return t;
}

std::vector<std::vector<int>> incidence_lists(const Graph& g) {
  std::vector<std::vector<int>> inc(g.n());
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge(e);
    inc[a].push_back(e);
    inc[b].push_back(e);
  }
  return inc;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// --- domination certificate LP --------------------------------------------------

// min sum w(v) x(v) over the finite-weight candidates, subject to
// sum over N[t] of x >= 1 for every terminal.  Lower-bounds the weight of
// any dominating set drawn from the candidates.
LpModel build_domination_lp(const Graph& g, const std::vector<int>& candidates,
                            const std::vector<int>& terminals) {
  LpModel m;
  std::vector<int> var_of(g.n(), -1);
  for (int v : candidates) {
    if (g.weight(v).is_infinite()) continue;
    var_of[v] = m.add_variable("x" + std::to_string(v), VarKind::VertexSelect,
                               g.weight(v).to_double(), v);
  }
  for (int t : terminals) {
    std::vector<std::pair<int, double>> terms;
    if (var_of[t] >= 0) terms.emplace_back(var_of[t], 1.0);
    for (int u : g.neighbors(t)) {
      if (var_of[u] >= 0) terms.emplace_back(var_of[u], 1.0);
    }
    m.add_constraint("dom" + std::to_string(t), RowSense::GreaterEqual,
                     std::move(terms), 1.0);
  }
  return m;
}

// Certified ratio of an integral cover weight against its relaxation
// optimum, clamped to >= 1 (the integral cover is itself a feasible point).
double certified_ratio(double integral, double relaxed, const char* what) {
  if (relaxed <= 1e-12) {
    if (integral <= 1e-12) return 1.0;
    throw InternalError(std::string(what) +
                        ": zero relaxation under a positive integral cover");
  }
  return std::max(1.0, integral / relaxed);
}

// Set-cover family with one candidate set per vertex of `candidates`: the
// terminals it dominates, at the vertex's weight.
std::vector<WeightedSet> domination_family(const Graph& g,
                                           const std::vector<int>& candidates,
                                           const std::vector<int>& terminals) {
  std::vector<int> terminal_pos(g.n(), -1);
  for (int i = 0; i < static_cast<int>(terminals.size()); ++i) {
    terminal_pos[terminals[i]] = i;
  }
  std::vector<WeightedSet> family;
  family.reserve(candidates.size());
  for (int v : candidates) {
    WeightedSet s;
    s.weight = g.weight(v);
    if (terminal_pos[v] >= 0) s.elements.push_back(terminal_pos[v]);
    for (int u : g.neighbors(v)) {
      if (terminal_pos[u] >= 0) s.elements.push_back(terminal_pos[u]);
    }
    std::sort(s.elements.begin(), s.elements.end());
    family.push_back(std::move(s));
  }
  return family;
}

SetCoverSolution run_backend(SetCoverBackend backend, int universe,
                             const std::vector<WeightedSet>& family) {
  if (backend == SetCoverBackend::Exact) {
    return solve_set_cover_exact(universe, family);
  }
  return greedy_set_cover(universe, family);
}

}  // namespace

// --- greedy set cover -----------------------------------------------------------

SetCoverSolution greedy_set_cover(int universe_size,
                                  const std::vector<WeightedSet>& family) {
  if (universe_size < 0) {
    throw InvalidInstanceError("universe size must be nonnegative");
  }
  std::vector<std::vector<int>> elems(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    elems[i] = family[i].elements;
    std::sort(elems[i].begin(), elems[i].end());
    elems[i].erase(std::unique(elems[i].begin(), elems[i].end()),
                   elems[i].end());
    for (int e : elems[i]) {
      if (e < 0 || e >= universe_size) {
        throw InvalidInstanceError("set element outside the universe");
      }
    }
  }
  std::vector<char> covered(universe_size, 0);
  int remaining = universe_size;
  std::vector<int> chosen;
  Fixed weight = Fixed::from_int(0);
  while (remaining > 0) {
    // Smallest weight per newly covered element; exact cross comparison,
    // ties toward the lowest set index.
    int best = -1;
    std::int64_t best_new = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].weight.is_infinite()) continue;
      std::int64_t fresh = 0;
      for (int e : elems[i]) fresh += !covered[e];
      if (fresh == 0) continue;
      if (best == -1) {
        best = static_cast<int>(i);
        best_new = fresh;
        continue;
      }
      __int128 lhs = static_cast<__int128>(family[i].weight.units()) * best_new;
      __int128 rhs =
          static_cast<__int128>(family[best].weight.units()) * fresh;
      if (lhs < rhs) {
        best = static_cast<int>(i);
        best_new = fresh;
      }
    }
    if (best == -1) {
      throw InfeasibleError(
          "an element is not covered by any finite-weight set");
    }
    chosen.push_back(best);
    weight += family[best].weight;
    for (int e : elems[best]) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return {std::move(chosen), weight};
}

SetCoverBackend default_backend(int family_size) {
  return family_size <= 18 ? SetCoverBackend::Exact : SetCoverBackend::Greedy;
}

// --- Steiner tree heuristic -----------------------------------------------------

std::vector<int> steiner_2approx_metric_mst(const Graph& g,
                                            const std::vector<Fixed>& lengths,
                                            const std::vector<int>& terminals) {
  if (static_cast<int>(lengths.size()) != g.m()) {
    throw InvalidInstanceError("one length per edge required");
  }
  if (terminals.empty()) {
    throw InvalidInstanceError("terminal set must be nonempty");
  }
  for (int t : terminals) {
    if (t < 0 || t >= g.n()) {
      throw InvalidInstanceError("terminal out of range");
    }
  }
  {
    std::vector<int> sorted = terminals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInstanceError("terminals must be distinct");
    }
  }
  const int k = static_cast<int>(terminals.size());
  if (k == 1) return {};

  const auto incident = incidence_lists(g);
  std::vector<PathTree> trees;
  trees.reserve(k);
  for (int t : terminals) {
    trees.push_back(shortest_paths(g, lengths, t, incident));
  }
  for (int j = 1; j < k; ++j) {
    if (trees[0].dist[terminals[j]] == kUnreached) {
      throw InfeasibleError("terminals are disconnected");
    }
  }

  // Minimum spanning tree of the terminal metric (Prim, ties toward the
  // lowest terminal position).
  std::vector<char> in_tree(k, 0);
  std::vector<std::int64_t> key(k, kUnreached);
  std::vector<int> link(k, -1);  // terminal position we connect through
  in_tree[0] = 1;
  for (int j = 1; j < k; ++j) {
    key[j] = trees[0].dist[terminals[j]];
    link[j] = 0;
  }
  std::set<int> union_edges;
  for (int step = 1; step < k; ++step) {
    int j = -1;
    for (int c = 1; c < k; ++c) {
      if (in_tree[c]) continue;
      if (j == -1 || key[c] < key[j]) j = c;
    }
    in_tree[j] = 1;
    // Expand the metric edge (link[j], j) into its underlying path.
    const PathTree& src = trees[link[j]];
    for (int v = terminals[j]; src.parent_edge[v] != -1;
         v = src.parent_vertex[v]) {
      union_edges.insert(src.parent_edge[v]);
    }
    for (int c = 1; c < k; ++c) {
      if (in_tree[c]) continue;
      std::int64_t d = trees[j].dist[terminals[c]];
      if (d < key[c]) {
        key[c] = d;
        link[c] = j;
      }
    }
  }

  // The expanded paths may overlap; keep a minimum spanning forest of the
  // union (Kruskal by length, ties toward the lower edge id) and prune
  // non-terminal leaves.
  std::vector<int> pool(union_edges.begin(), union_edges.end());
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    if (lengths[a].units() != lengths[b].units()) {
      return lengths[a].units() < lengths[b].units();
    }
    return a < b;
  });
  UnionFind uf(g.n());
  std::vector<int> kept;
  for (int e : pool) {
    auto [a, b] = g.edge(e);
    if (uf.unite(a, b)) kept.push_back(e);
  }
  std::vector<char> keep(g.n(), 0);
  for (int t : terminals) keep[t] = 1;
  std::vector<int> pruned = prune_tree_leaves(g, kept, keep);
  std::sort(pruned.begin(), pruned.end());
  return pruned;
}

// --- spanning variant -----------------------------------------------------------

SpanningReport solve_cds_spanning_case(const CdsInstance& inst,
                                       SetCoverBackend backend) {
  const Graph& g = inst.graph;
  if (static_cast<int>(inst.terminals.size()) != g.n()) {
    throw InvalidInstanceError(
        "spanning variant requires every vertex to be a terminal");
  }
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  SetCoverSolution cover =
      run_backend(backend, g.n(), domination_family(g, all, all));
  // Chosen set indices are vertex indices here, already sorted.
  const std::vector<int>& s = cover.chosen;

  LpSolution relax = solve_lp(build_domination_lp(g, all, all));
  if (relax.status != LpStatus::Optimal) {
    throw InternalError(std::string("domination relaxation: ") +
                        to_string(relax.status));
  }

  std::vector<int> tree = steiner_2approx_metric_mst(g, g.lengths(), s);
  CdsSolution sol{s, tree, weight_sum(g, s) + length_sum(g, tree)};
  Verdict verdict = validate_cds_solution(inst, sol);
  if (!verdict.ok) {
    throw InternalError("spanning construction is invalid: " +
                        verdict.violation);
  }
  SpanningReport out;
  out.solution = std::move(sol);
  out.domset_lp = relax.objective;
  out.beta_cert =
      certified_ratio(cover.weight.to_double(), relax.objective, "domination");
  return out;
}

// --- rounding pipeline ----------------------------------------------------------

std::string RoundingReport::to_json() const {
  nlohmann::json j;
  j["root"] = root;
  j["xstar_weight"] = xstar_weight;
  j["ystar_length"] = ystar_length;
  j["lp1_objective"] = lp1_objective;
  j["heavy"] = heavy;
  j["cover_weight"] = cover_weight;
  j["setcover_lp"] = setcover_lp;
  j["gamma_cert"] = gamma_cert;
  j["steiner_length"] = steiner_length;
  j["pendant_length"] = pendant_length;
  j["objective"] = objective;
  j["certificates"] = {{"cover_scale", cover_scale_ok},
                       {"reroute", reroute_ok},
                       {"steiner_factor", steiner_factor_ok},
                       {"pendant", pendant_ok}};
  return j.dump();
}

std::pair<CdsSolution, RoundingReport> solve_cds_rounding(
    const CdsInstance& inst, int root, SetCoverBackend backend) {
  const Graph& g = inst.graph;
  if (!g.has_coords()) {
    throw InvalidInstanceError(
        "rounding requires vertex coordinates for the square partition");
  }
  if (root < 0 || root >= g.n()) {
    throw InvalidInstanceError("root out of range");
  }

  LpModel lp1 = build_cds_flow_lp(inst, root);
  LpSolution s1 = solve_lp(lp1);
  if (s1.status == LpStatus::Infeasible) {
    throw InfeasibleError("rooted flow relaxation is infeasible");
  }
  if (s1.status != LpStatus::Optimal) {
    throw InternalError(std::string("rooted flow relaxation: ") +
                        to_string(s1.status));
  }
  CdsFlowPoint star = unpack_cds_point(lp1, g, s1.values);

  RoundingReport rep;
  rep.root = root;
  for (int v = 0; v < g.n(); ++v) {
    rep.xstar_weight += g.weight(v).to_double() * star.x[v];
  }
  for (int e = 0; e < g.m(); ++e) {
    rep.ystar_length += g.length(e).to_double() * star.y[e];
  }
  rep.lp1_objective = s1.objective;

  SquarePartition part = square_partition(g);
  SetCoverLp sc = build_setcover_lp(inst, part, star.x, kTheta);
  rep.heavy = sc.heavy;
  LpSolution s2 = solve_lp(sc.model);
  if (s2.status != LpStatus::Optimal) {
    throw InternalError(std::string("restricted domination relaxation: ") +
                        to_string(s2.status));
  }
  rep.setcover_lp = s2.objective;

  // Scaling certificate: theta x*, restricted to the heavy union, must be
  // feasible for the restricted relaxation, which bounds its optimum.
  std::vector<double> scaled(sc.model.num_variables(), 0.0);
  for (int j = 0; j < sc.model.num_variables(); ++j) {
    scaled[j] = kTheta * star.x[sc.model.variable(j).tag1];
  }
  rep.cover_scale_ok = sc.model.max_violation(scaled) <= 1e-9 &&
                       s2.objective <= kTheta * rep.xstar_weight + 1e-6;

  // Integral cover restricted to the heavy union.
  std::vector<int> cands;
  for (int i : rep.heavy) {
    cands.insert(cands.end(), part.classes[i].begin(), part.classes[i].end());
  }
  std::sort(cands.begin(), cands.end());
  SetCoverSolution cover =
      run_backend(backend, static_cast<int>(inst.terminals.size()),
                  domination_family(g, cands, inst.terminals));
  std::vector<int> s;
  s.reserve(cover.chosen.size());
  for (int idx : cover.chosen) s.push_back(cands[idx]);
  rep.cover_weight = cover.weight.to_double();
  rep.gamma_cert =
      certified_ratio(rep.cover_weight, s2.objective, "restricted domination");

  // Tree over the root and the class representatives.
  std::vector<int> reps;
  reps.reserve(rep.heavy.size());
  for (int i : rep.heavy) reps.push_back(part.classes[i].front());
  std::vector<int> st_terms = reps;
  st_terms.push_back(root);
  std::sort(st_terms.begin(), st_terms.end());
  st_terms.erase(std::unique(st_terms.begin(), st_terms.end()),
                 st_terms.end());
  std::vector<int> tree_f = steiner_2approx_metric_mst(g, g.lengths(), st_terms);
  Fixed f_len = length_sum(g, tree_f);
  rep.steiner_length = f_len.to_double();

  LpModel lp3 = build_steiner_flow_lp(g, g.lengths(), root, reps);
  LpSolution s3 = solve_lp(lp3);
  if (s3.status != LpStatus::Optimal) {
    throw InternalError(std::string("Steiner flow relaxation: ") +
                        to_string(s3.status));
  }
  rep.steiner_factor_ok = rep.steiner_length <= 2.0 * s3.objective + 1e-6;

  SteinerFlowPoint moved = reroute_flow(g, star, part, reps, root, kTheta);
  std::vector<double> packed = pack_steiner_point(lp3, reps, moved);
  double moved_cost = lp3.objective_value(packed);
  rep.reroute_ok =
      lp3.max_violation(packed) <= 1e-8 &&
      moved_cost <= kTheta * (rep.xstar_weight + rep.ystar_length) + 1e-6 &&
      s3.objective <= moved_cost + 1e-7;

  // Pendant edges: every cover vertex the tree missed hangs off its class
  // representative by the clique edge.
  std::vector<char> spanned(g.n(), 0);
  for (int v : tree_vertices(g, tree_f)) spanned[v] = 1;
  if (tree_f.empty()) spanned[root] = 1;
  std::vector<int> pendants;
  for (int v : s) {
    if (spanned[v]) continue;
    int rv = part.classes[part.class_of[v]].front();
    if (rv == v) continue;  // degenerate self-pendant: nothing to add
    std::optional<int> eid = g.edge_id(v, rv);
    if (!eid) {
      throw InternalError(
          "partition class lacks the clique edge needed for a pendant");
    }
    pendants.push_back(*eid);
  }
  Fixed pend_len = length_sum(g, pendants);
  Fixed cover_w = weight_sum(g, s);
  rep.pendant_length = pend_len.to_double();
  rep.pendant_ok = pend_len <= cover_w;

  std::vector<int> tree = tree_f;
  tree.insert(tree.end(), pendants.begin(), pendants.end());
  std::sort(tree.begin(), tree.end());
  tree.erase(std::unique(tree.begin(), tree.end()), tree.end());

  CdsSolution sol{std::move(s), std::move(tree), Fixed::from_int(0)};
  sol.objective = cover_w + length_sum(g, sol.tree);
  Verdict verdict = validate_cds_solution(inst, sol);
  if (!verdict.ok) {
    throw InternalError("rounding produced an invalid solution: " +
                        verdict.violation);
  }
  rep.objective = sol.objective.to_double();
  return {std::move(sol), std::move(rep)};
}

std::pair<CdsSolution, RoundingReport> solve_cds_all_roots(
    const CdsInstance& inst, SetCoverBackend backend, bool restrict_roots) {
  const Graph& g = inst.graph;
  std::vector<int> roots;
  bool have = false;
  std::pair<CdsSolution, RoundingReport> best;
  if (restrict_roots && g.n() > 40) {
    // Probe once from the lowest terminal, then try only terminals and
    // heavy-class members of that probe.
    std::set<int> pool(inst.terminals.begin(), inst.terminals.end());
    try {
      auto probe = solve_cds_rounding(inst, inst.terminals.front(), backend);
      SquarePartition part = square_partition(g);
      for (int i : probe.second.heavy) {
        pool.insert(part.classes[i].begin(), part.classes[i].end());
      }
      best = std::move(probe);
      have = true;
    } catch (const InfeasibleError&) {
    }
    pool.erase(inst.terminals.front());
    roots.assign(pool.begin(), pool.end());
  } else {
    roots.resize(g.n());
    std::iota(roots.begin(), roots.end(), 0);
  }
  for (int root : roots) {
    try {
      auto cur = solve_cds_rounding(inst, root, backend);
      bool better = !have || cur.first.objective < best.first.objective ||
                    (cur.first.objective == best.first.objective &&
                     cur.second.root < best.second.root);
      if (better) {
        best = std::move(cur);
        have = true;
      }
    } catch (const InfeasibleError&) {
      continue;
    }
  }
  if (!have) {
    throw InfeasibleError("no root admits a feasible rooted relaxation");
  }
  return best;
}

}  // namespace vcst
