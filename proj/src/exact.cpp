#include "vcst/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>

namespace vcst {

namespace {

constexpr std::int64_t kInfUnits = std::numeric_limits<std::int64_t>::max();

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a == kInfUnits || b == kInfUnits) return kInfUnits;
  return a + b;
}

// lexicographic comparison of two vertex sets given as bitmasks, viewed as
// ascending vertex lists
bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool lex_less_vec(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// component of `start` within `mask` using bitmask adjacency
std::uint32_t mask_component(const std::vector<std::uint32_t>& adj,
                             std::uint32_t mask, int start) {
  std::uint32_t reach = 1u << start, frontier = reach;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t add = adj[v] & mask & ~reach;
    reach |= add;
    frontier |= add;
  }
  return reach;
}

}  // namespace

VcstSolution solve_vcst_exact(const VcstInstance& inst) {
  const Graph& g = inst.graph;
  if (g.n() > 24)
    throw SizeLimitError("exact cover enumeration limited to 24 vertices");

  std::vector<std::uint32_t> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t term_mask = 0;
  for (int t : inst.terminals) term_mask |= 1u << t;
  const int t0 = inst.terminals[0];

  {  // the terminals must be connected in g at all
    std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    if ((mask_component(adj, all, t0) & term_mask) != term_mask)
      throw InfeasibleError("terminals are not connected in the graph");
  }

  std::vector<int> finite;  // candidate cover vertices
  for (int v = 0; v < g.n(); ++v)
    if (!g.weight(v).is_infinite()) finite.push_back(v);
  const int k = static_cast<int>(finite.size());

  // feasibility of a cover candidate: component of t0 in the subgraph of
  // covered edges must contain every terminal
  auto feasible = [&](std::uint32_t cover_mask) {
    std::uint32_t reach = 1u << t0, frontier = reach;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t allowed =
          (cover_mask >> v) & 1u ? adj[v] : (adj[v] & cover_mask);
      std::uint32_t add = allowed & ~reach;
      reach |= add;
      frontier |= add;
    }
    return (reach & term_mask) == term_mask;
  };

  auto expand = [&](std::uint32_t compressed) {
    std::uint32_t mask = 0;
    while (compressed) {
      int i = std::countr_zero(compressed);
      compressed &= compressed - 1;
      mask |= 1u << finite[i];
    }
    return mask;
  };

  bool found = false;
  std::int64_t best_units = kInfUnits;
  std::uint32_t best_mask = 0;

  for (int c = 0; c <= k; ++c) {
    // subsets of size c in increasing numeric value (Gosper's hack)
    std::uint32_t sub = c == 0 ? 0 : (1u << c) - 1;
    while (true) {
      std::uint32_t mask = expand(sub);
      std::int64_t units = 0;
      for (std::uint32_t s = mask; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        units += g.weight(v).units();
      }
      if ((units < best_units ||
           (units == best_units && lex_less(mask, best_mask))) &&
          feasible(mask)) {
        best_units = units;
        best_mask = mask;
        found = true;
      }
      if (c == 0) break;
      // next subset of the same size
      std::uint32_t lo = sub & (~sub + 1), up = sub + lo;
      sub = up | (((sub ^ up) / lo) >> 2);
      if (sub >= (1u << k)) break;
    }
  }
  if (!found)
    throw InfeasibleError(
        "terminals can be connected only through infinite-weight vertices");

  // build the tree: BFS tree of the terminal component in the covered-edge
  // subgraph, pruned to a minimal Steiner tree
  std::vector<int> tree;
  {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue{t0};
    seen[t0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : g.neighbors(u)) {
        bool covered = ((best_mask >> u) & 1u) || ((best_mask >> w) & 1u);
        if (!covered || seen[w]) continue;
        seen[w] = 1;
        tree.push_back(*g.edge_id(u, w));
        queue.push_back(w);
      }
    }
  }
  std::vector<char> keep(g.n(), 0);
  for (int t : inst.terminals) keep[t] = 1;
  tree = prune_tree_leaves(g, tree, keep);

  std::vector<int> vf = tree_vertices(g, tree);
  VcstSolution sol;
  sol.tree = tree;
  for (int v = 0; v < g.n(); ++v)
    if (((best_mask >> v) & 1u) &&
        std::binary_search(vf.begin(), vf.end(), v))
      sol.cover.push_back(v);
  sol.objective = weight_sum(g, sol.cover);
  if (sol.objective.units() != best_units)
    throw InternalError("pruned cover changed the optimal objective");
  Verdict verdict = validate_vcst_solution(inst, sol);
  if (!verdict.ok)
    throw InternalError("exact solver produced invalid solution: " +
                        verdict.violation);
  return sol;
}

Fixed solve_vcst_exact_crosscheck(const VcstInstance& inst) {
  const Graph& g = inst.graph;
  if (g.n() > 9)
    throw SizeLimitError("tree-enumeration oracle limited to 9 vertices");
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t term_mask = 0;
  for (int t : inst.terminals) term_mask |= 1u << t;

  bool found = false;
  Fixed best = Fixed::infinity();
  const std::uint32_t full = (1u << g.n()) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if ((mask & term_mask) != term_mask) continue;
    if (mask == 0) continue;
    int low = std::countr_zero(mask);
    if (mask_component(adj, mask, low) != mask) continue;  // not connected
    std::vector<int> vs;
    for (int v = 0; v < g.n(); ++v)
      if ((mask >> v) & 1u) vs.push_back(v);
    for_each_spanning_tree(g, vs, [&](const std::vector<int>& tree) {
      auto [cover, w] = tree_min_vertex_cover(g, tree);
      (void)cover;
      if (!w.is_infinite()) found = true;
      best = min(best, w);
    });
  }
  if (!found)
    throw InfeasibleError("no finite-weight solution exists");
  return best;
}

std::pair<std::vector<int>, Fixed> solve_edge_steiner_exact(
    const Graph& g, const std::vector<int>& terminals) {
  if (!g.has_lengths())
    throw InvalidInstanceError("edge-weighted Steiner needs edge lengths");
  if (terminals.empty()) throw InvalidInstanceError("empty terminal set");
  if (terminals.size() > 12)
    throw SizeLimitError("Steiner dynamic program limited to 12 terminals");
  std::vector<int> ts = terminals;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.size() == 1) return {{}, Fixed()};

  const int n = g.n();
  const int k = static_cast<int>(ts.size()) - 1;  // ts[1..] get mask bits
  const int t0 = ts[0];
  const std::uint32_t full = (1u << k) - 1;

  // dp[mask][v]: cheapest connector of {v} + terminals in mask
  std::vector<std::vector<std::int64_t>> dp(
      full + 1, std::vector<std::int64_t>(n, kInfUnits));
  // decision record: merge split (positive) or growth edge (negative-coded)
  struct Back {
    std::uint32_t split = 0;  // nonzero: merge with (split, mask^split)
    int from = -1;            // >= 0: grown from vertex `from`
    int edge = -1;
  };
  std::vector<std::vector<Back>> back(full + 1, std::vector<Back>(n));

  for (int i = 0; i < k; ++i) dp[1u << i][ts[i + 1]] = 0;

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    auto& row = dp[mask];
    // merges
    for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      if (sub < (mask ^ sub)) continue;  // each split once
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (int v = 0; v < n; ++v) {
        std::int64_t cost = saturating_add(a[v], b[v]);
        if (cost < row[v]) {
          row[v] = cost;
          back[mask][v] = {sub, -1, -1};
        }
      }
    }
    // growth: Bellman-Ford style relaxation over edges (graphs are small)
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < g.m(); ++e) {
        if (g.length(e).is_infinite()) continue;
        auto [u, v] = g.edge(e);
        std::int64_t lu = g.length(e).units();
        std::int64_t c1 = saturating_add(row[u], lu);
        if (c1 < row[v]) {
          row[v] = c1;
          back[mask][v] = {0, u, e};
          changed = true;
        }
        std::int64_t c2 = saturating_add(row[v], lu);
        if (c2 < row[u]) {
          row[u] = c2;
          back[mask][u] = {0, v, e};
          changed = true;
        }
      }
    }
  }

  if (dp[full][t0] == kInfUnits)
    throw InfeasibleError("terminals are not connected by finite lengths");

  // collect edges of one optimal connector
  std::vector<char> edge_used(g.m(), 0);
  std::vector<std::pair<std::uint32_t, int>> stack{{full, t0}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    if (std::popcount(mask) == 1 && v == ts[std::countr_zero(mask) + 1])
      continue;
    const Back& b = back[mask][v];
    if (b.from >= 0) {
      edge_used[b.edge] = 1;
      stack.push_back({mask, b.from});
    } else if (b.split) {
      stack.push_back({b.split, v});
      stack.push_back({mask ^ b.split, v});
    }
  }
  std::vector<int> edges;
  for (int e = 0; e < g.m(); ++e)
    if (edge_used[e]) edges.push_back(e);

  // the union is a connected terminal-spanning subgraph; reduce it to a
  // minimal tree and confirm the dynamic-program value
  std::vector<int> order = edges;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a < b;
  });
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> tree;
  for (int e : order) {
    auto [u, v] = g.edge(e);
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      tree.push_back(e);
    }
  }
  std::vector<char> keep(n, 0);
  for (int t : ts) keep[t] = 1;
  tree = prune_tree_leaves(g, tree, keep);
  std::sort(tree.begin(), tree.end());
  Fixed total = length_sum(g, tree);
  if (total.units() != dp[full][t0])
    throw InternalError("Steiner reconstruction does not match its value");
  return {tree, total};
}

CdsSolution solve_cds_exact(const CdsInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.n();
  if (n > 18)
    throw SizeLimitError("exact connected-domination limited to 18 vertices");

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t term_mask = 0;
  for (int t : inst.terminals) term_mask |= 1u << t;

  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> edge_order(g.m());
  std::iota(edge_order.begin(), edge_order.end(), 0);
  std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a < b;
  });

  // MST length of each connected induced subgraph (else infinity); infinite
  // length edges are unusable
  std::vector<std::int64_t> steiner(full + 1, kInfUnits);
  std::vector<int> parent(n);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int cnt = std::popcount(mask);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::int64_t total = 0;
    int joined = 1;
    for (int e : edge_order) {
      if (joined == cnt) break;
      if (g.length(e).is_infinite()) continue;
      auto [u, v] = g.edge(e);
      if (!((mask >> u) & 1u) || !((mask >> v) & 1u)) continue;
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        total += g.length(e).units();
        ++joined;
      }
    }
    if (joined == cnt) steiner[mask] = total;
  }
  // cheapest tree over any connected superset
  std::vector<std::uint32_t> best_superset(full + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) best_superset[mask] = mask;
  for (int b = 0; b < n; ++b)
    for (std::uint32_t mask = full; mask > 0; --mask) {
      if ((mask >> b) & 1u) continue;
      std::uint32_t up = mask | (1u << b);
      if (steiner[up] < steiner[mask]) {
        steiner[mask] = steiner[up];
        best_superset[mask] = best_superset[up];
      }
    }

  std::vector<std::uint32_t> dom(n);
  for (int v = 0; v < n; ++v) dom[v] = adj[v] | (1u << v);

  bool found = false;
  std::int64_t best_units = kInfUnits;
  std::uint32_t best_s = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t covered = 0;
    std::int64_t weight = 0;
    bool usable = true;
    for (std::uint32_t rest = s; rest && usable;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (g.weight(v).is_infinite()) usable = false;
      covered |= dom[v];
      weight += usable ? g.weight(v).units() : 0;
    }
    if (!usable || (covered & term_mask) != term_mask) continue;
    if (steiner[s] == kInfUnits) continue;
    std::int64_t objective = weight + steiner[s];
    if (objective < best_units ||
        (objective == best_units && lex_less(s, best_s))) {
      best_units = objective;
      best_s = s;
      found = true;
    }
  }
  if (!found)
    throw InfeasibleError(
        "terminals cannot be dominated within a connected structure");

  CdsSolution sol;
  for (int v = 0; v < n; ++v)
    if ((best_s >> v) & 1u) sol.domset.push_back(v);
  std::uint32_t vf = best_superset[best_s];
  if (std::popcount(vf) > 1) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : edge_order) {
      if (g.length(e).is_infinite()) continue;
      auto [u, v] = g.edge(e);
      if (!((vf >> u) & 1u) || !((vf >> v) & 1u)) continue;
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        sol.tree.push_back(e);
      }
    }
    std::sort(sol.tree.begin(), sol.tree.end());
  }
  sol.objective = weight_sum(g, sol.domset) + length_sum(g, sol.tree);
  if (sol.objective.units() != best_units)
    throw InternalError("reconstructed tree changed the optimal objective");
  Verdict verdict = validate_cds_solution(inst, sol);
  if (!verdict.ok)
    throw InternalError("exact solver produced invalid solution: " +
                        verdict.violation);
  return sol;
}

SetCoverSolution solve_set_cover_exact(int universe_size,
                                       const std::vector<WeightedSet>& family) {
  if (universe_size < 0 || universe_size > 64)
    throw SizeLimitError("universe limited to 64 elements");
  if (family.size() > 22)
    throw SizeLimitError("set-cover enumeration limited to 22 sets");
  const int k = static_cast<int>(family.size());
  const std::uint64_t full =
      universe_size == 64 ? ~0ull : ((1ull << universe_size) - 1);

  std::vector<std::uint64_t> masks(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int el : family[i].elements) {
      if (el < 0 || el >= universe_size)
        throw InvalidInstanceError("set element out of range");
      masks[i] |= 1ull << el;
    }
    if (family[i].weight.is_infinite()) masks[i] = 0;  // never selectable
    else if (family[i].weight < Fixed())
      throw InvalidInstanceError("negative set weight");
  }
  std::vector<std::uint64_t> suffix(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | masks[i];
  if ((suffix[0] & full) != full)
    throw InfeasibleError("an element cannot be covered");

  std::int64_t best_units = kInfUnits;
  std::vector<int> best, chosen;
  bool found = false;

  std::function<void(int, std::uint64_t, std::int64_t)> recurse =
      [&](int i, std::uint64_t covered, std::int64_t units) {
        if (units > best_units) return;
        if (covered == full) {
          if (!found || units < best_units ||
              (units == best_units && lex_less_vec(chosen, best))) {
            best_units = units;
            best = chosen;
            found = true;
          }
          return;
        }
        if (i == k || (covered | suffix[i]) != full) return;
        if (masks[i]) {
          chosen.push_back(i);
          recurse(i + 1, covered | masks[i], units + family[i].weight.units());
          chosen.pop_back();
        }
        recurse(i + 1, covered, units);
      };
  recurse(0, 0, 0);
  if (!found) throw InfeasibleError("an element cannot be covered");

  SetCoverSolution sol;
  sol.chosen = best;
  sol.weight = Fixed::from_units(best_units);
  return sol;
}

NwsSolution solve_nws_exact(const NwsInstance& inst) {
  const Graph& g = inst.graph;
  if (g.n() > 24)
    throw SizeLimitError("exact subset enumeration limited to 24 vertices");

  std::vector<std::uint32_t> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t term_mask = 0;
  for (int t : inst.terminals) term_mask |= 1u << t;
  const int t0 = inst.terminals[0];

  std::vector<int> optional;  // finite-weight non-terminals
  for (int v = 0; v < g.n(); ++v)
    if (!((term_mask >> v) & 1u) && !g.weight(v).is_infinite())
      optional.push_back(v);
  const int k = static_cast<int>(optional.size());

  bool found = false;
  std::int64_t best_units = kInfUnits;
  std::uint32_t best_mask = 0;

  for (int c = 0; c <= k; ++c) {
    std::uint32_t sub = c == 0 ? 0 : (1u << c) - 1;
    while (true) {
      std::int64_t units = 0;
      std::uint32_t mask = term_mask;
      for (std::uint32_t s = sub; s;) {
        int i = std::countr_zero(s);
        s &= s - 1;
        mask |= 1u << optional[i];
        units = saturating_add(units, g.weight(optional[i]).units());
      }
      if ((units < best_units ||
           (units == best_units && lex_less(mask, best_mask))) &&
          (mask_component(adj, mask, t0) & mask) == mask) {
        best_units = units;
        best_mask = mask;
        found = true;
      }
      if (c == 0) break;
      std::uint32_t lo = sub & (~sub + 1), up = sub + lo;
      sub = up | (((sub ^ up) / lo) >> 2);
      if (sub >= (1u << k)) break;
    }
  }
  if (!found)
    throw InfeasibleError(
        "terminals cannot be connected by finite-weight vertices");

  NwsSolution sol;
  std::vector<char> in_set(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if ((best_mask >> v) & 1u) {
      in_set[v] = 1;
      sol.chosen.push_back(v);
    }
  sol.tree = bfs_tree(g, in_set, t0);
  sol.added_weight = Fixed::from_units(best_units);
  Verdict check = validate_nws_solution(inst, sol);
  if (!check.ok)
    throw InternalError("enumerated solution invalid: " + check.violation);
  return sol;
}

ActivationSolution solve_activation_exact(const ActivationInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.n();
  const int L = static_cast<int>(inst.levels.size());
  double combos = 1.0;
  for (int v = 0; v < n; ++v) combos *= L;
  if (combos > double(1 << 20))
    throw SizeLimitError("level enumeration limited to 2^20 assignments");

  std::vector<int> assign(n, 0), best;
  std::int64_t best_units = kInfUnits;
  auto feasible = [&]() {
    std::vector<char> seen(n, 0);
    std::vector<int> queue{inst.terminals[0]};
    seen[inst.terminals[0]] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : g.neighbors(u)) {
        if (seen[w]) continue;
        int e = *g.edge_id(u, w);
        auto [lo, hi] = g.edge(e);
        if (!inst.active(e, assign[lo], assign[hi])) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    for (int t : inst.terminals)
      if (!seen[t]) return false;
    return true;
  };
  // lexicographic enumeration with strict improvement keeps the smallest
  // optimal vector
  while (true) {
    std::int64_t units = 0;
    for (int v = 0; v < n; ++v)
      units = saturating_add(units, inst.levels[assign[v]].units());
    if (units < best_units && feasible()) {
      best_units = units;
      best = assign;
    }
    int v = n - 1;
    while (v >= 0 && assign[v] == L - 1) assign[v--] = 0;
    if (v < 0) break;
    ++assign[v];
  }
  if (best_units == kInfUnits)
    throw InfeasibleError("no level assignment connects the terminals");

  ActivationSolution sol;
  sol.level_of = best;
  sol.objective = Fixed::from_units(best_units);
  Verdict verdict = validate_activation_solution(inst, sol);
  if (!verdict.ok)
    throw InternalError("exact activation solver produced invalid solution: " +
                        verdict.violation);
  return sol;
}

}  // namespace vcst
