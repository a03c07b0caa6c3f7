#include "vcst/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vcst {

namespace {

// Checks that `tree` is a tree in g spanning `required`; an empty tree
// passes only when at most one vertex is required.
void check_steiner_tree(const Graph& g, const std::vector<int>& tree,
                        const std::vector<int>& required) {
  for (int e : tree)
    if (e < 0 || e >= g.m()) throw InvalidInstanceError("edge id out of range");
  std::set<int> ids(tree.begin(), tree.end());
  if (ids.size() != tree.size())
    throw InvalidInstanceError("duplicate tree edge");
  if (tree.empty()) {
    if (required.size() > 1)
      throw InvalidInstanceError("tree does not span the terminals");
    return;
  }
  std::vector<int> vs = tree_vertices(g, tree);
  if (vs.size() != tree.size() + 1)
    throw InvalidInstanceError("not a tree (cyclic or disconnected)");
  std::map<int, std::vector<int>> adj;
  for (int e : tree) {
    auto [u, v] = g.edge(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != vs.size())
    throw InvalidInstanceError("not a tree (cyclic or disconnected)");
  for (int t : required)
    if (!seen.count(t))
      throw InvalidInstanceError("tree does not span the terminals");
}

}  // namespace

ActivationInstance encode_vcst_as_activation(const VcstInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<Fixed> levels{Fixed()};
  for (int v = 0; v < g.n(); ++v) levels.push_back(g.weight(v));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const int L = static_cast<int>(levels.size());
  const std::uint64_t all_bits = L == 64 ? ~0ull : ((1ull << L) - 1);
  std::vector<std::vector<std::uint64_t>> tables(g.m());
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    // bits for "j >= w(v)" form a suffix of the sorted level list
    int first_v = static_cast<int>(
        std::lower_bound(levels.begin(), levels.end(), g.weight(v)) -
        levels.begin());
    std::uint64_t suffix =
        first_v >= L ? 0ull : (all_bits & ~((1ull << first_v) - 1));
    tables[e].resize(L);
    for (int a = 0; a < L; ++a)
      tables[e][a] = levels[a] >= g.weight(u) ? all_bits : suffix;
  }
  return ActivationInstance(g, inst.terminals, std::move(levels),
                            std::move(tables));
}

NwsReduction reduce_activation_to_nws(const ActivationInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.n();
  const int L = static_cast<int>(inst.levels.size());
  const int nt = static_cast<int>(inst.terminals.size());

  // a copy (v, a) is kept iff the level is zero, v is a terminal, or some
  // incident edge activates with v at level a
  std::vector<std::vector<char>> kept(n, std::vector<char>(L, 0));
  for (int v = 0; v < n; ++v) {
    bool terminal = std::binary_search(inst.terminals.begin(),
                                       inst.terminals.end(), v);
    for (int a = 0; a < L; ++a)
      if (terminal || inst.levels[a] == Fixed()) kept[v][a] = 1;
  }
  for (int e = 0; e < g.m(); ++e) {
    auto [p, q] = g.edge(e);
    std::uint64_t col = 0;  // union over rows: levels of q that activate
    for (int a = 0; a < L; ++a) {
      if (inst.tables[e][a] != 0) kept[p][a] = 1;
      col |= inst.tables[e][a];
    }
    for (int b = 0; b < L; ++b)
      if ((col >> b) & 1u) kept[q][b] = 1;
  }

  std::vector<int> origin_vertex, origin_level;
  for (int t : inst.terminals) {
    origin_vertex.push_back(t);
    origin_level.push_back(-1);
  }
  std::vector<std::vector<int>> copy_id(n, std::vector<int>(L, -1));
  GraphData d;
  d.weights.assign(nt, Fixed());  // anchors weigh nothing
  int next = nt;
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < L; ++a)
      if (kept[v][a]) {
        copy_id[v][a] = next++;
        origin_vertex.push_back(v);
        origin_level.push_back(a);
        d.weights.push_back(inst.levels[a]);
      }
  d.n = next;

  for (int r = 0; r < nt; ++r) {
    int t = inst.terminals[r];
    for (int a = 0; a < L; ++a)
      if (copy_id[t][a] >= 0) d.edges.push_back({r, copy_id[t][a]});
  }
  for (int e = 0; e < g.m(); ++e) {
    auto [p, q] = g.edge(e);
    for (int a = 0; a < L; ++a) {
      if (copy_id[p][a] < 0) continue;
      for (int b = 0; b < L; ++b)
        if (((inst.tables[e][a] >> b) & 1u) && copy_id[q][b] >= 0)
          d.edges.push_back({copy_id[p][a], copy_id[q][b]});
    }
  }

  std::vector<int> anchors(nt);
  for (int r = 0; r < nt; ++r) anchors[r] = r;
  return {NwsInstance(Graph(std::move(d)), std::move(anchors)),
          std::move(origin_vertex), std::move(origin_level)};
}

ActivationLift lift_nws_to_activation(const ActivationInstance& original,
                                      const NwsReduction& red,
                                      const std::vector<int>& tree_edges) {
  const Graph& rg = red.instance.graph;
  check_steiner_tree(rg, tree_edges, red.instance.terminals);

  ActivationLift lift;
  std::vector<int> highest(original.graph.n(), -1);
  std::map<int, int> degree;
  for (int e : tree_edges) {
    auto [u, v] = rg.edge(e);
    ++degree[u];
    ++degree[v];
  }
  for (const auto& [r, deg] : degree) {
    if (deg == 1 && red.origin_level[r] >= 0) lift.not_minimal = true;
    if (red.origin_level[r] < 0) continue;  // anchor
    int v = red.origin_vertex[r];
    if (highest[v] >= 0) lift.multi_copy = true;
    highest[v] = std::max(highest[v], red.origin_level[r]);
  }

  lift.solution.level_of.assign(original.graph.n(), 0);
  for (int v = 0; v < original.graph.n(); ++v) {
    if (highest[v] >= 0) {
      lift.solution.level_of[v] = highest[v];
    } else if (original.levels[0] != Fixed()) {
      lift.level_floor = true;
    }
    lift.solution.objective += original.levels[lift.solution.level_of[v]];
  }
  return lift;
}

CdsInstance reduce_vcst_to_cds(const VcstInstance& inst) {
  const Graph& g = inst.graph;
  GraphData d;
  d.n = g.n();
  d.edges = g.edges();
  d.weights = g.weights();
  d.coords = g.coords();
  d.unit_disk = g.is_unit_disk();
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    d.lengths.push_back(min(g.weight(u), g.weight(v)));
  }
  return CdsInstance(Graph(std::move(d)), inst.terminals);
}

VcstSolution lift_cds_to_vcst(const VcstInstance& inst,
                              const CdsSolution& cds) {
  CdsInstance reduced = reduce_vcst_to_cds(inst);
  Verdict check = validate_cds_solution(reduced, cds);
  if (!check.ok)
    throw InvalidInstanceError("connected-domination solution invalid: " +
                               check.violation);
  if (inst.terminals.size() == 1) return {{}, {}, Fixed()};

  const Graph& g = inst.graph;
  std::set<int> dom(cds.domset.begin(), cds.domset.end());
  std::set<int> spanned;
  for (int v : tree_vertices(g, cds.tree)) spanned.insert(v);
  if (cds.tree.empty())
    spanned.insert(cds.domset.begin(), cds.domset.end());

  std::vector<int> tree = cds.tree;
  for (int t : inst.terminals) {
    if (spanned.count(t)) continue;
    int host = -1;
    for (int w : g.neighbors(t))  // ascending, so the first hit is lowest
      if (dom.count(w)) {
        host = w;
        break;
      }
    if (host < 0) throw InternalError("dominated terminal has no host");
    tree.push_back(*g.edge_id(t, host));
    spanned.insert(t);
  }
  std::sort(tree.begin(), tree.end());

  std::set<int> cover(cds.domset.begin(), cds.domset.end());
  for (int e : cds.tree) {
    auto [u, v] = g.edge(e);
    cover.insert(g.weight(u) <= g.weight(v) ? u : v);
  }

  VcstSolution sol;
  sol.tree = std::move(tree);
  sol.cover.assign(cover.begin(), cover.end());
  sol.objective = weight_sum(g, sol.cover);
  Verdict out = validate_vcst_solution(inst, sol);
  if (!out.ok)
    throw InternalError("lifted solution invalid: " + out.violation);
  return sol;
}

SetCoverGadget gadget_from_set_cover(
    int universe_size, const std::vector<std::vector<int>>& family) {
  if (universe_size < 0)
    throw InvalidInstanceError("universe size must be nonnegative");
  std::vector<std::vector<int>> sets;
  std::vector<char> covered(universe_size, 0);
  for (const auto& raw : family) {
    std::vector<int> set = raw;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int el : set) {
      if (el < 0 || el >= universe_size)
        throw InvalidInstanceError("set element out of range");
      covered[el] = 1;
    }
    sets.push_back(std::move(set));
  }
  for (int el = 0; el < universe_size; ++el)
    if (!covered[el])
      throw InvalidInstanceError("an element is not covered by any set");

  const int k = static_cast<int>(sets.size());
  GraphData d;
  d.n = universe_size + k;
  if (d.n == 0) throw InvalidInstanceError("gadget would be empty");
  d.weights.assign(d.n, Fixed::from_int(1));
  for (int j = 0; j < k; ++j)
    for (int el : sets[j]) d.edges.push_back({el, universe_size + j});
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      d.edges.push_back({universe_size + a, universe_size + b});

  std::vector<int> terminals(d.n);
  for (int v = 0; v < d.n; ++v) terminals[v] = v;
  return {VcstInstance(Graph(std::move(d)), std::move(terminals)),
          universe_size, std::move(sets)};
}

VcstSolution SetCoverGadget::cover_to_solution(
    const std::vector<int>& chosen_sets) const {
  const Graph& g = instance.graph;
  std::vector<int> chosen = chosen_sets;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int j : chosen)
    if (j < 0 || j >= static_cast<int>(family.size()))
      throw InvalidInstanceError("set index out of range");
  if (g.n() == 1) return {{}, {}, Fixed()};
  if (chosen.empty())
    throw InvalidInstanceError("need at least one chosen set");

  VcstSolution sol;
  for (int el = 0; el < universe_size; ++el) {
    int host = -1;
    for (int j : chosen)
      if (std::binary_search(family[j].begin(), family[j].end(), el)) {
        host = j;
        break;
      }
    if (host < 0)
      throw InvalidInstanceError("chosen sets do not cover the universe");
    sol.tree.push_back(*g.edge_id(el, set_vertex(host)));
  }
  int center = set_vertex(chosen[0]);
  for (int j = 0; j < static_cast<int>(family.size()); ++j)
    if (set_vertex(j) != center)
      sol.tree.push_back(*g.edge_id(center, set_vertex(j)));
  std::sort(sol.tree.begin(), sol.tree.end());

  for (int j : chosen) sol.cover.push_back(set_vertex(j));
  sol.objective = weight_sum(g, sol.cover);
  Verdict out = validate_vcst_solution(instance, sol);
  if (!out.ok)
    throw InternalError("cover mapping produced an invalid solution: " +
                        out.violation);
  return sol;
}

std::vector<int> SetCoverGadget::solution_to_cover(
    const VcstSolution& sol) const {
  Verdict check = validate_vcst_solution(instance, sol);
  if (!check.ok)
    throw InvalidInstanceError("solution invalid: " + check.violation);
  const Graph& g = instance.graph;
  if (g.n() == 1) return {};

  std::map<int, std::set<int>> adj;
  for (int e : sol.tree) {
    auto [u, v] = g.edge(e);
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::set<int> cover(sol.cover.begin(), sol.cover.end());
  // exchange element vertices for set vertices, lowest element first
  while (!cover.empty() && *cover.begin() < universe_size) {
    int u = *cover.begin();
    // all tree neighbors of an element vertex are set vertices
    std::vector<int> hosts(adj[u].begin(), adj[u].end());
    int v1 = hosts[0];
    cover.erase(u);
    cover.insert(v1);
    for (std::size_t i = 1; i < hosts.size(); ++i) {
      int w = hosts[i];
      adj[u].erase(w);
      adj[w].erase(u);
      adj[v1].insert(w);
      adj[w].insert(v1);
    }
  }

  std::vector<int> result;
  for (int v : cover) result.push_back(v - universe_size);
  std::vector<char> seen(universe_size, 0);
  for (int j : result)
    for (int el : family[j]) seen[el] = 1;
  for (int el = 0; el < universe_size; ++el)
    if (!seen[el])
      throw InternalError("exchanged cover misses an element");
  return result;
}

GridGadget gadget_subdivide_grid(const Graph& grid,
                                 const std::vector<Fixed>& edge_weights,
                                 const std::vector<int>& terminals) {
  if (!grid.has_coords())
    throw InvalidInstanceError("grid graph must carry coordinates");
  if (static_cast<int>(edge_weights.size()) != grid.m())
    throw InvalidInstanceError("one weight per grid edge required");
  const std::int64_t spacing = 4 * Fixed::kScale;
  for (int v = 0; v < grid.n(); ++v) {
    const Point& p = grid.coord(v);
    if (p.x % spacing != 0 || p.y % spacing != 0)
      throw InvalidInstanceError("grid points must lie on the 4-unit lattice");
  }
  for (int t : terminals)
    if (t < 0 || t >= grid.n())
      throw InvalidInstanceError("terminals must be grid vertices");

  GraphData d;
  d.n = grid.n() + 3 * grid.m();
  d.weights.assign(grid.n(), Fixed());
  d.coords = grid.coords();
  d.unit_disk = true;
  std::vector<std::array<int, 3>> subdivision;
  for (int e = 0; e < grid.m(); ++e) {
    auto [u, v] = grid.edge(e);
    std::int64_t dx = d.coords[v].x - d.coords[u].x;
    std::int64_t dy = d.coords[v].y - d.coords[u].y;
    bool axis_step = (dx == 0 && (dy == spacing || dy == -spacing)) ||
                     (dy == 0 && (dx == spacing || dx == -spacing));
    if (!axis_step)
      throw InvalidInstanceError(
          "grid edge does not join adjacent lattice points");
    int base = grid.n() + 3 * e;
    for (int s = 1; s <= 3; ++s)
      d.coords.push_back({d.coords[u].x + dx / 4 * s,
                          d.coords[u].y + dy / 4 * s});
    d.weights.push_back(Fixed::infinity());
    d.weights.push_back(edge_weights[e]);
    d.weights.push_back(Fixed::infinity());
    d.edges.push_back({u, base});
    d.edges.push_back({base, base + 1});
    d.edges.push_back({base + 1, base + 2});
    d.edges.push_back({base + 2, v});
    subdivision.push_back({base, base + 1, base + 2});
  }
  return {VcstInstance(Graph(std::move(d)), terminals),
          std::move(subdivision)};
}

}  // namespace vcst
