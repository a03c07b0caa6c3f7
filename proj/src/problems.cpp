#include "vcst/problems.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vcst {

namespace {

std::vector<int> checked_terminals(const Graph& g, std::vector<int> ts) {
  if (ts.empty()) throw InvalidInstanceError("empty terminal set");
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 0 || ts[i] >= g.n())
      throw InvalidInstanceError("terminal out of range");
    if (i > 0 && ts[i] == ts[i - 1])
      throw InvalidInstanceError("duplicate terminal");
  }
  return ts;
}

// Shared tree-shape check: edge ids valid and distinct, and the edge set
// forms a single tree over its endpoints.  Returns a verdict.
Verdict check_tree_shape(const Graph& g, const std::vector<int>& edge_ids) {
  std::set<int> seen;
  for (int e : edge_ids) {
    if (e < 0 || e >= g.m()) return Verdict::fail("edge id out of range");
    if (!seen.insert(e).second) return Verdict::fail("duplicate tree edge");
  }
  if (edge_ids.empty()) return Verdict::pass();
  std::vector<int> vs = tree_vertices(g, edge_ids);
  if (edge_ids.size() + 1 != vs.size())
    return Verdict::fail("not a tree (cyclic or disconnected)");
  // connectivity over the edge set
  std::map<int, std::vector<int>> adj;
  for (int e : edge_ids) {
    auto [u, v] = g.edge(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> reach{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (reach.insert(w).second) stack.push_back(w);
  }
  if (reach.size() != vs.size())
    return Verdict::fail("not a tree (cyclic or disconnected)");
  return Verdict::pass();
}

}  // namespace

VcstInstance::VcstInstance(Graph g, std::vector<int> ts)
    : graph(std::move(g)), terminals(checked_terminals(graph, std::move(ts))) {}

CdsInstance::CdsInstance(Graph g, std::vector<int> ts)
    : graph(std::move(g)), terminals(checked_terminals(graph, std::move(ts))) {
  if (!graph.has_lengths())
    throw InvalidInstanceError("connected-domination instance without lengths");
  for (int e = 0; e < graph.m(); ++e) {
    auto [u, v] = graph.edge(e);
    if (graph.length(e) > min(graph.weight(u), graph.weight(v)))
      throw InvalidInstanceError(
          "edge length exceeds the lighter endpoint weight");
  }
}

NwsInstance::NwsInstance(Graph g, std::vector<int> ts)
    : graph(std::move(g)), terminals(checked_terminals(graph, std::move(ts))) {}

ActivationInstance::ActivationInstance(Graph g, std::vector<int> ts,
                                       std::vector<Fixed> lv,
                                       std::vector<std::vector<std::uint64_t>> tb)
    : graph(std::move(g)),
      terminals(checked_terminals(graph, std::move(ts))),
      levels(std::move(lv)),
      tables(std::move(tb)) {
  if (levels.empty() || levels.size() > 64)
    throw InvalidInstanceError("level set must have between 1 and 64 entries");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i - 1] < levels[i]))
      throw InvalidInstanceError("levels must be sorted and distinct");
  if (static_cast<int>(tables.size()) != graph.m())
    throw InvalidInstanceError("one activation table per edge required");
  const std::size_t L = levels.size();
  const std::uint64_t used_bits =
      L == 64 ? ~0ull : ((1ull << L) - 1);
  for (const auto& table : tables) {
    if (table.size() != L)
      throw InvalidInstanceError("activation table has wrong row count");
    for (std::size_t a = 0; a < L; ++a) {
      if (table[a] & ~used_bits)
        throw InvalidInstanceError("activation table uses undefined levels");
      // monotone in the second argument: bit b set implies bit b+1 set
      for (std::size_t b = 0; b + 1 < L; ++b)
        if (((table[a] >> b) & 1u) && !((table[a] >> (b + 1)) & 1u))
          throw InvalidInstanceError("activation table not monotone");
      // monotone in the first argument: row a implies row a+1
      if (a + 1 < L && (table[a] & ~table[a + 1]))
        throw InvalidInstanceError("activation table not monotone");
    }
  }
}

bool ActivationInstance::active_for(int edge, int u, int lu, int v,
                                    int lv) const {
  auto [a, b] = graph.edge(edge);
  if (u == a && v == b) return active(edge, lu, lv);
  if (u == b && v == a) return active(edge, lv, lu);
  throw InternalError("edge endpoints do not match");
}

Verdict validate_vcst_solution(const VcstInstance& inst,
                               const VcstSolution& sol) {
  const Graph& g = inst.graph;
  Verdict shape = check_tree_shape(g, sol.tree);
  if (!shape.ok) return shape;
  std::vector<int> vf = tree_vertices(g, sol.tree);
  if (sol.tree.empty()) {
    if (inst.terminals.size() > 1) return Verdict::fail("terminal not spanned");
  } else {
    for (int t : inst.terminals)
      if (!std::binary_search(vf.begin(), vf.end(), t))
        return Verdict::fail("terminal not spanned");
  }
  std::set<int> cover(sol.cover.begin(), sol.cover.end());
  if (cover.size() != sol.cover.size())
    return Verdict::fail("duplicate cover vertex");
  for (int e : sol.tree) {
    auto [u, v] = g.edge(e);
    if (!cover.count(u) && !cover.count(v))
      return Verdict::fail("uncovered edge");
  }
  for (int v : cover) {
    if (v < 0 || v >= g.n()) return Verdict::fail("cover vertex out of range");
    if (!std::binary_search(vf.begin(), vf.end(), v))
      return Verdict::fail("cover vertex outside tree");
  }
  if (weight_sum(g, sol.cover) != sol.objective)
    return Verdict::fail("objective mismatch");
  return Verdict::pass();
}

Verdict validate_cds_solution(const CdsInstance& inst, const CdsSolution& sol) {
  const Graph& g = inst.graph;
  std::set<int> dom(sol.domset.begin(), sol.domset.end());
  if (dom.size() != sol.domset.size())
    return Verdict::fail("duplicate dominating vertex");
  for (int v : dom)
    if (v < 0 || v >= g.n())
      return Verdict::fail("dominating vertex out of range");
  for (int t : inst.terminals) {
    bool ok = dom.count(t) > 0;
    for (int w : g.neighbors(t))
      if (!ok && dom.count(w)) ok = true;
    if (!ok) return Verdict::fail("terminal not dominated");
  }
  Verdict shape = check_tree_shape(g, sol.tree);
  if (!shape.ok) return shape;
  if (sol.tree.empty()) {
    if (dom.size() > 1)
      return Verdict::fail("dominating set not spanned by tree");
  } else {
    std::vector<int> vf = tree_vertices(g, sol.tree);
    for (int v : dom)
      if (!std::binary_search(vf.begin(), vf.end(), v))
        return Verdict::fail("dominating set not spanned by tree");
  }
  if (weight_sum(g, sol.domset) + length_sum(g, sol.tree) != sol.objective)
    return Verdict::fail("objective mismatch");
  return Verdict::pass();
}

Verdict validate_activation_solution(const ActivationInstance& inst,
                                     const ActivationSolution& sol) {
  const Graph& g = inst.graph;
  if (static_cast<int>(sol.level_of.size()) != g.n())
    return Verdict::fail("level assignment size mismatch");
  Fixed total;
  for (int v = 0; v < g.n(); ++v) {
    int l = sol.level_of[v];
    if (l < 0 || l >= static_cast<int>(inst.levels.size()))
      return Verdict::fail("level index out of range");
    total += inst.levels[l];
  }
  // activated subgraph must connect the terminals
  std::vector<char> all(g.n(), 1);
  std::vector<std::vector<int>> adj(g.n());
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (inst.active(e, sol.level_of[u], sol.level_of[v])) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<char> seen(g.n(), 0);
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
  for (int t : inst.terminals)
    if (!seen[t]) return Verdict::fail("terminal not connected when activated");
  if (total != sol.objective) return Verdict::fail("objective mismatch");
  return Verdict::pass();
}

Verdict validate_nws_solution(const NwsInstance& inst, const NwsSolution& sol) {
  const Graph& g = inst.graph;
  std::set<int> chosen(sol.chosen.begin(), sol.chosen.end());
  if (chosen.size() != sol.chosen.size())
    return Verdict::fail("duplicate chosen vertex");
  for (int v : chosen)
    if (v < 0 || v >= g.n()) return Verdict::fail("chosen vertex out of range");
  for (int t : inst.terminals)
    if (!chosen.count(t)) return Verdict::fail("terminal not chosen");
  std::vector<char> in(g.n(), 0);
  for (int v : chosen) in[v] = 1;
  if (!is_connected_subset(g, in))
    return Verdict::fail("chosen set not connected");
  Verdict shape = check_tree_shape(g, sol.tree);
  if (!shape.ok) return shape;
  std::vector<int> vf = tree_vertices(g, sol.tree);
  if (chosen.size() > 1 &&
      (vf.size() != chosen.size() ||
       !std::equal(vf.begin(), vf.end(), chosen.begin())))
    return Verdict::fail("tree does not span the chosen set");
  Fixed added;
  for (int v : chosen)
    if (!std::binary_search(inst.terminals.begin(), inst.terminals.end(), v))
      added += g.weight(v);
  if (added != sol.added_weight) return Verdict::fail("objective mismatch");
  return Verdict::pass();
}

std::pair<std::vector<int>, Fixed> tree_min_vertex_cover(
    const Graph& g, const std::vector<int>& tree_edges) {
  if (tree_edges.empty()) return {{}, Fixed()};
  Verdict shape = check_tree_shape(g, tree_edges);
  if (!shape.ok) throw InvalidInstanceError(shape.violation);

  std::vector<int> vs = tree_vertices(g, tree_edges);
  std::map<int, std::vector<int>> adj;
  for (int e : tree_edges) {
    auto [u, v] = g.edge(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int root = vs[0];

  // iterative post-order
  std::vector<int> order, parent_stack{root};
  std::map<int, int> parent{{root, -1}};
  while (!parent_stack.empty()) {
    int u = parent_stack.back();
    parent_stack.pop_back();
    order.push_back(u);
    for (int w : adj[u])
      if (!parent.count(w)) {
        parent[w] = u;
        parent_stack.push_back(w);
      }
  }

  std::map<int, Fixed> dp_ex, dp_in;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    Fixed ex, in = g.weight(u);
    for (int w : adj[u]) {
      if (w == parent[u]) continue;
      ex += dp_in[w];
      in += min(dp_ex[w], dp_in[w]);
    }
    dp_ex[u] = ex;
    dp_in[u] = in;
  }

  // reconstruct, preferring exclusion on ties everywhere (in particular at
  // the root)
  std::vector<int> cover;
  std::vector<std::pair<int, bool>> stack{{root, dp_ex[root] <= dp_in[root]}};
  std::set<int> visited{root};
  while (!stack.empty()) {
    auto [u, excluded] = stack.back();
    stack.pop_back();
    if (!excluded) cover.push_back(u);
    for (int w : adj[u]) {
      if (w == parent[u]) continue;
      bool child_excluded = excluded ? false : dp_ex[w] <= dp_in[w];
      stack.push_back({w, child_excluded});
    }
  }
  std::sort(cover.begin(), cover.end());
  return {cover, min(dp_ex[root], dp_in[root])};
}

int cover_degree(const Graph& g, const std::vector<int>& tree_edges,
                 const std::vector<int>& cover) {
  Verdict shape = check_tree_shape(g, tree_edges);
  if (!shape.ok) throw InvalidInstanceError(shape.violation);
  std::set<int> u_set(cover.begin(), cover.end());
  std::map<int, int> deg;
  for (int e : tree_edges) {
    auto [u, v] = g.edge(e);
    if (!u_set.count(u) && !u_set.count(v))
      throw InvalidInstanceError("cover does not cover every tree edge");
    ++deg[u];
    ++deg[v];
  }
  // delete the leaves of F that are outside the cover, in one pass
  std::set<int> removed;
  for (const auto& [v, d] : deg)
    if (d == 1 && !u_set.count(v)) removed.insert(v);
  std::map<int, int> deg2;
  for (int e : tree_edges) {
    auto [u, v] = g.edge(e);
    if (removed.count(u) || removed.count(v)) continue;
    ++deg2[u];
    ++deg2[v];
  }
  int best = 0;
  for (int v : cover)
    if (deg2.count(v)) best = std::max(best, deg2[v]);
  return best;
}

Fixed weight_sum(const Graph& g, const std::vector<int>& vertices) {
  Fixed total;
  for (int v : vertices) total += g.weight(v);
  return total;
}

Fixed length_sum(const Graph& g, const std::vector<int>& edge_ids) {
  Fixed total;
  for (int e : edge_ids) total += g.length(e);
  return total;
}

std::vector<int> tree_vertices(const Graph& g,
                               const std::vector<int>& edge_ids) {
  std::set<int> vs;
  for (int e : edge_ids) {
    auto [u, v] = g.edge(e);
    vs.insert(u);
    vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

}  // namespace vcst
