#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcst/problems.hpp"
#include "vcst/reductions.hpp"

namespace vcst {

// --- primal-dual node-weighted Steiner ------------------------------------------

// One growth event: `vertex` went tight at `time`, with the active-set
// family (terminal-containing components of the induced subgraph) recorded
// just before the addition.
struct PdEvent {
  double time = 0.0;
  int vertex = -1;
  std::vector<std::vector<int>> active_sets;
};

// History of a primal-dual run: the growth phase adds one vertex per event
// until a single active set remains; reverse deletion then strips vertices
// in reverse addition order whenever connectivity of the terminals
// survives, leaving the inclusion-wise minimal set xbar.
struct PdTrace {
  std::vector<int> initial;  // the terminals (X at the start)
  std::vector<PdEvent> events;
  std::vector<int> final_x;  // end of the growth phase, sorted
  std::vector<int> xbar;     // after reverse deletion, sorted

  // X after the first k additions (k = 0 gives the initial set).
  std::vector<int> snapshot(int k) const;
  std::string to_json() const;
};

// Event-driven primal dual: every active set raises its dual at unit rate;
// a vertex outside X goes tight when the accumulated duals of the active
// sets adjacent to it reach its weight.  Weight-zero vertices are absorbed
// at time zero, in index order.  Event times are compared in exact
// rational arithmetic and simultaneous events break toward the lowest
// vertex index, so runs are deterministic.  Infinite-weight vertices never
// go tight; if the active sets cannot expand before merging into one, the
// terminals are disconnected and InfeasibleError is raised.
std::pair<NwsSolution, PdTrace> solve_nws_pd(const NwsInstance& inst);

// --- debt graph ------------------------------------------------------------------

// Bipartite contact structure between a growth-phase snapshot X and the
// final set: contract each active set of X to one vertex, keep the
// vertices of xbar minus X that touch an active set (side B), and connect
// an active set to each such vertex in its neighborhood.  The edge count
// equals the sum over active sets Y of |(xbar \ X) ∩ N(Y)|.
struct DebtGraph {
  std::vector<std::vector<int>> active_sets;  // side A, by smallest member
  std::vector<int> b;                         // side B, sorted vertex ids
  // Members of B with a copy of the same original vertex inside some
  // active set (anchors do not count as copies).
  std::vector<int> b_prime;
  std::vector<std::pair<int, int>> edges;  // (active-set index, B vertex)
};

// The snapshot must contain the terminals; xbar must contain them and
// induce a connected subgraph.  Violations raise InvalidInstanceError.
DebtGraph build_debt_graph(const NwsReduction& red,
                           const std::vector<int>& snapshot_x,
                           const std::vector<int>& xbar);

struct DebtSnapshotRow {
  int snapshot = 0;  // number of additions applied
  int edges = 0;
  int num_active = 0;   // |A|
  int b_size = 0;       // |B|
  int b_prime_size = 0; // |B'|
  bool edge_bound_ok = true;  // edges <= 11 |A|   (asserted when planar)
  bool b_bound_ok = true;     // |B| <= 2 |A|      (asserted when planar)
};

struct DebtReport {
  std::vector<DebtSnapshotRow> rows;  // one per growth-phase snapshot
  bool planar_bounds_ok = true;       // both bounds at every snapshot
  // No two copies of one original vertex survive in xbar.
  bool copies_unique = true;
  // No two distinct active sets of any snapshot touch the copy set of the
  // same original vertex.
  bool copy_disjoint = true;
  double gamma_max = 0.0;  // max over snapshots of edges / |A|

  bool all_ok() const {
    return planar_bounds_ok && copies_unique && copy_disjoint;
  }
};

// Evaluates every snapshot of the trace against the final xbar.  With
// `planar` set the two bipartite bounds are asserted per row; without it
// they are reported but not enforced.
DebtReport check_debt_bounds(const NwsReduction& red, const PdTrace& trace,
                             bool planar);

// Condensed version of an active set: per original vertex only the
// highest-level copy survives, and it is swapped for the member of `b`
// covering the same original when one exists; anchors are kept.  Sorted.
std::vector<int> condense_active_set(const NwsReduction& red,
                                     const std::vector<int>& active_set,
                                     const std::vector<int>& b);

// Divides `ybar` into one piece per marked vertex by simultaneous BFS
// carving (seeds in the given order, neighbors ascending).  Every piece
// induces a connected subgraph and contains exactly one marked vertex.
// Requires marked nonempty, distinct, inside ybar, and ybar connected.
std::vector<std::vector<int>> carve_connected_pieces(
    const Graph& g, const std::vector<int>& ybar,
    const std::vector<int>& marked);

// --- activation solver ------------------------------------------------------------

// Reduces the activation instance to node-weighted Steiner, runs the
// primal-dual solver, and lifts the tree back to activation levels.  The
// lifted solution is validated, and a surviving duplicate copy of an
// original vertex raises InternalError (the minimality of the reverse
// deletion rules it out).
ActivationSolution solve_activation_minor_free(const ActivationInstance& inst);

}  // namespace vcst
