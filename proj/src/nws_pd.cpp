#include "vcst/nws_pd.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace vcst {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Terminal-containing connected components of the induced subgraph, each
// sorted, ordered by smallest member.  comp_id gets the component index of
// every in-set vertex (also for non-active components), -1 elsewhere.
std::vector<std::vector<int>> active_family(const Graph& g,
                                            const std::vector<char>& in_set,
                                            const std::vector<char>& is_term,
                                            std::vector<int>& comp_id) {
  comp_id.assign(g.n(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n(); ++s) {
    if (!in_set[s] || comp_id[s] != -1) continue;
    int id = static_cast<int>(comps.size());
    std::vector<int> queue = {s};
    comp_id[s] = id;
    std::vector<int> members;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      members.push_back(u);
      for (int w : g.neighbors(u)) {
        if (in_set[w] && comp_id[w] == -1) {
          comp_id[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }
  std::vector<std::vector<int>> active;
  std::vector<int> remap(comps.size(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool has_term = false;
    for (int v : comps[i]) has_term |= is_term[v] != 0;
    if (has_term) {
      remap[i] = static_cast<int>(active.size());
      active.push_back(comps[i]);
    }
  }
  // Re-point comp_id at active components only.
  for (int v = 0; v < g.n(); ++v) {
    if (comp_id[v] != -1) comp_id[v] = remap[comp_id[v]];
  }
  return active;
}

bool terminals_connected(const Graph& g, const std::vector<char>& in_set,
                         const std::vector<int>& terminals) {
  std::vector<int> comp =
      component_of(g, in_set, terminals.front());
  for (int t : terminals) {
    if (!std::binary_search(comp.begin(), comp.end(), t)) return false;
  }
  return true;
}

std::vector<int> sorted_members(const std::vector<char>& in_set) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(in_set.size()); ++v) {
    if (in_set[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> PdTrace::snapshot(int k) const {
  if (k < 0 || k > static_cast<int>(events.size())) {
    throw InvalidInstanceError("snapshot index out of range");
  }
  std::vector<int> x = initial;
  for (int i = 0; i < k; ++i) x.push_back(events[i].vertex);
  std::sort(x.begin(), x.end());
  return x;
}

std::string PdTrace::to_json() const {
  nlohmann::json j;
  j["initial"] = initial;
  nlohmann::json evs = nlohmann::json::array();
  for (const PdEvent& e : events) {
    evs.push_back({{"time", e.time},
                   {"vertex", e.vertex},
                   {"active_sets", e.active_sets.size()}});
  }
  j["events"] = std::move(evs);
  j["final_x"] = final_x;
  j["xbar"] = xbar;
  return j.dump();
}

std::pair<NwsSolution, PdTrace> solve_nws_pd(const NwsInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<char> in_x(g.n(), 0);
  std::vector<char> is_term(g.n(), 0);
  for (int t : inst.terminals) {
    in_x[t] = 1;
    is_term[t] = 1;
  }

  PdTrace trace;
  trace.initial = inst.terminals;
  std::vector<int> added;
  std::vector<Rational> load(g.n(), Rational(0));
  Rational now(0);
  std::vector<int> comp_id;

  auto record_add = [&](int v) {
    PdEvent e;
    // Loads and times are tracked in micro-units; report natural units.
    e.time = (now / Fixed::kScale).convert_to<double>();
    e.vertex = v;
    e.active_sets = active_family(g, in_x, is_term, comp_id);
    trace.events.push_back(std::move(e));
    in_x[v] = 1;
    added.push_back(v);
  };

  // Weight-zero vertices are tight from the start; absorb them at time 0.
  for (int v = 0; v < g.n(); ++v) {
    if (!in_x[v] && g.weight(v) == Fixed::from_int(0)) record_add(v);
  }

  for (int guard = 0; guard <= g.n(); ++guard) {
    std::vector<std::vector<int>> active =
        active_family(g, in_x, is_term, comp_id);
    if (active.size() <= 1) break;
    // Exposure: number of distinct active sets adjacent to each outside
    // vertex; the next event minimizes residual weight over exposure.
    int chosen = -1;
    Rational best_dt;
    std::vector<std::pair<int, int>> exposed;  // (vertex, exposure)
    for (int v = 0; v < g.n(); ++v) {
      if (in_x[v]) continue;
      std::set<int> seen;
      for (int w : g.neighbors(v)) {
        if (in_x[w] && comp_id[w] >= 0) seen.insert(comp_id[w]);
      }
      if (seen.empty()) continue;
      int exposure = static_cast<int>(seen.size());
      exposed.emplace_back(v, exposure);
      if (g.weight(v).is_infinite()) continue;
      Rational residual = Rational(g.weight(v).units()) - load[v];
      Rational dt = residual / exposure;
      if (chosen == -1 || dt < best_dt) {
        chosen = v;
        best_dt = dt;
      }
    }
    if (chosen == -1) {
      throw InfeasibleError(
          "active sets cannot expand; the terminals are disconnected");
    }
    now += best_dt;
    for (auto [v, exposure] : exposed) {
      if (!g.weight(v).is_infinite()) load[v] += Rational(exposure) * best_dt;
    }
    record_add(chosen);
  }
  trace.final_x = sorted_members(in_x);

  // Reverse deletion: drop each non-terminal, newest first, whenever the
  // terminals stay connected without it.
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    int v = *it;
    if (is_term[v]) continue;
    in_x[v] = 0;
    if (!terminals_connected(g, in_x, inst.terminals)) in_x[v] = 1;
  }
  trace.xbar = sorted_members(in_x);

  NwsSolution sol;
  sol.chosen = trace.xbar;
  sol.tree = bfs_tree(g, in_x, inst.terminals.front());
  std::sort(sol.tree.begin(), sol.tree.end());
  sol.added_weight = Fixed::from_int(0);
  for (int v : sol.chosen) {
    if (!is_term[v]) sol.added_weight += g.weight(v);
  }
  Verdict verdict = validate_nws_solution(inst, sol);
  if (!verdict.ok) {
    throw InternalError("primal-dual produced an invalid solution: " +
                        verdict.violation);
  }
  return {std::move(sol), std::move(trace)};
}

// --- debt graph ------------------------------------------------------------------

DebtGraph build_debt_graph(const NwsReduction& red,
                           const std::vector<int>& snapshot_x,
                           const std::vector<int>& xbar) {
  const Graph& g = red.instance.graph;
  auto check_set = [&](const std::vector<int>& s, const char* what) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidInstanceError(std::string(what) +
                                 " must be sorted and distinct");
    }
    if (!s.empty() && (s.front() < 0 || s.back() >= g.n())) {
      throw InvalidInstanceError(std::string(what) + " vertex out of range");
    }
    for (int t : red.instance.terminals) {
      if (!std::binary_search(s.begin(), s.end(), t)) {
        throw InvalidInstanceError(std::string(what) +
                                   " must contain the terminals");
      }
    }
  };
  check_set(snapshot_x, "snapshot");
  check_set(xbar, "final set");
  std::vector<char> in_xbar(g.n(), 0);
  for (int v : xbar) in_xbar[v] = 1;
  if (!terminals_connected(g, in_xbar, red.instance.terminals)) {
    throw InvalidInstanceError("final set does not connect the terminals");
  }

  std::vector<char> in_x(g.n(), 0);
  std::vector<char> is_term(g.n(), 0);
  for (int v : snapshot_x) in_x[v] = 1;
  for (int t : red.instance.terminals) is_term[t] = 1;

  DebtGraph d;
  std::vector<int> comp_id;
  d.active_sets = active_family(g, in_x, is_term, comp_id);

  // xbar' = xbar \ X; side B keeps those of its members adjacent to some
  // active set, with one edge per (active set, member) contact.
  std::vector<char> in_aug(g.n(), 0);
  for (int v : xbar) {
    if (!in_x[v]) in_aug[v] = 1;
  }
  std::set<int> b_used;
  for (std::size_t i = 0; i < d.active_sets.size(); ++i) {
    std::set<int> contact;
    for (int u : d.active_sets[i]) {
      for (int w : g.neighbors(u)) {
        if (in_aug[w]) contact.insert(w);
      }
    }
    for (int w : contact) {
      d.edges.emplace_back(static_cast<int>(i), w);
      b_used.insert(w);
    }
  }
  d.b.assign(b_used.begin(), b_used.end());
  std::sort(d.edges.begin(), d.edges.end());

  // B': a copy of the same original vertex sits inside an active set.
  std::set<int> originals_in_active;
  for (const auto& y : d.active_sets) {
    for (int u : y) {
      if (red.origin_level[u] >= 0) originals_in_active.insert(red.origin_vertex[u]);
    }
  }
  for (int v : d.b) {
    if (red.origin_level[v] >= 0 &&
        originals_in_active.count(red.origin_vertex[v])) {
      d.b_prime.push_back(v);
    }
  }
  return d;
}

DebtReport check_debt_bounds(const NwsReduction& red, const PdTrace& trace,
                             bool planar) {
  DebtReport rep;
  const int total = static_cast<int>(trace.events.size());
  for (int k = 0; k <= total; ++k) {
    std::vector<int> x = trace.snapshot(k);
    DebtGraph d = build_debt_graph(red, x, trace.xbar);
    DebtSnapshotRow row;
    row.snapshot = k;
    row.edges = static_cast<int>(d.edges.size());
    row.num_active = static_cast<int>(d.active_sets.size());
    row.b_size = static_cast<int>(d.b.size());
    row.b_prime_size = static_cast<int>(d.b_prime.size());
    row.edge_bound_ok = row.edges <= 11 * row.num_active;
    row.b_bound_ok = row.b_size <= 2 * row.num_active;
    if (planar) {
      rep.planar_bounds_ok =
          rep.planar_bounds_ok && row.edge_bound_ok && row.b_bound_ok;
    }
    if (row.num_active > 0) {
      rep.gamma_max = std::max(
          rep.gamma_max, static_cast<double>(row.edges) / row.num_active);
    }
    // No two distinct active sets may touch the copy set of one original.
    std::map<int, int> owner;
    for (std::size_t i = 0; i < d.active_sets.size(); ++i) {
      for (int u : d.active_sets[i]) {
        if (red.origin_level[u] < 0) continue;
        auto [it, fresh] =
            owner.emplace(red.origin_vertex[u], static_cast<int>(i));
        if (!fresh && it->second != static_cast<int>(i)) {
          rep.copy_disjoint = false;
        }
      }
    }
    rep.rows.push_back(row);
  }
  // At most one copy of each original vertex survives reverse deletion.
  std::set<int> seen;
  for (int v : trace.xbar) {
    if (red.origin_level[v] < 0) continue;
    if (!seen.insert(red.origin_vertex[v]).second) rep.copies_unique = false;
  }
  return rep;
}

std::vector<int> condense_active_set(const NwsReduction& red,
                                     const std::vector<int>& active_set,
                                     const std::vector<int>& b) {
  // Highest-level copy per original; the B copy of the same original wins
  // when present.
  std::map<int, int> best;  // original -> reduced copy
  std::vector<int> out;
  for (int u : active_set) {
    if (red.origin_level[u] < 0) {
      out.push_back(u);  // anchors survive untouched
      continue;
    }
    auto [it, fresh] = best.emplace(red.origin_vertex[u], u);
    if (!fresh && red.origin_level[u] > red.origin_level[it->second]) {
      it->second = u;
    }
  }
  for (auto& [orig, copy] : best) {
    for (int w : b) {
      if (red.origin_level[w] >= 0 && red.origin_vertex[w] == orig) {
        copy = w;
        break;
      }
    }
    out.push_back(copy);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> carve_connected_pieces(
    const Graph& g, const std::vector<int>& ybar,
    const std::vector<int>& marked) {
  if (marked.empty()) {
    throw InvalidInstanceError("carving needs at least one marked vertex");
  }
  std::vector<char> in_set(g.n(), 0);
  for (int v : ybar) {
    if (v < 0 || v >= g.n()) {
      throw InvalidInstanceError("carve vertex out of range");
    }
    in_set[v] = 1;
  }
  std::vector<int> piece_of(g.n(), -1);
  std::vector<int> queue;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    int v = marked[i];
    if (v < 0 || v >= g.n() || !in_set[v] || piece_of[v] != -1) {
      throw InvalidInstanceError("marked vertices must be distinct members");
    }
    piece_of[v] = static_cast<int>(i);
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (in_set[w] && piece_of[w] == -1) {
        piece_of[w] = piece_of[u];
        queue.push_back(w);
      }
    }
  }
  for (int v : ybar) {
    if (piece_of[v] == -1) {
      throw InternalError("carved set is not connected to any marked vertex");
    }
  }
  std::vector<std::vector<int>> pieces(marked.size());
  for (int v : ybar) pieces[piece_of[v]].push_back(v);
  for (auto& p : pieces) std::sort(p.begin(), p.end());
  return pieces;
}

// --- activation solver ------------------------------------------------------------

ActivationSolution solve_activation_minor_free(const ActivationInstance& inst) {
  NwsReduction red = reduce_activation_to_nws(inst);
  auto [nws_sol, trace] = solve_nws_pd(red.instance);

  std::set<int> originals;
  for (int v : nws_sol.chosen) {
    if (red.origin_level[v] < 0) continue;
    if (!originals.insert(red.origin_vertex[v]).second) {
      throw InternalError(
          "two copies of one original vertex survived reverse deletion");
    }
  }

  ActivationLift lift = lift_nws_to_activation(inst, red, nws_sol.tree);
  if (lift.multi_copy) {
    throw InternalError("lift saw duplicate copies in a minimal tree");
  }
  Verdict verdict = validate_activation_solution(inst, lift.solution);
  if (!verdict.ok) {
    throw InternalError("lifted activation solution is invalid: " +
                        verdict.violation);
  }
  return lift.solution;
}

}  // namespace vcst
