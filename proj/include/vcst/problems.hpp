#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcst/graph.hpp"

namespace vcst {

// Result of a validation check.  `ok` with an empty message, or the first
// violated condition in `violation`.
struct Verdict {
  bool ok = true;
  std::string violation;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// --- vertex-cover-weighted Steiner tree -----------------------------------

// Find a tree F spanning the terminals and a vertex cover U of F minimizing
// the total weight of U.  The spanning variant is terminals == all vertices.
struct VcstInstance {
  Graph graph;
  std::vector<int> terminals;  // sorted, distinct, nonempty

  VcstInstance(Graph g, std::vector<int> ts);
};

struct VcstSolution {
  std::vector<int> tree;   // edge ids of the instance graph
  std::vector<int> cover;  // sorted vertex list, subset of the tree vertices
  Fixed objective;         // sum of cover weights
};

// Checks tree-ness, terminal spanning, edge coverage, cover containment and
// the objective value, in that order; reports the first violation.
Verdict validate_vcst_solution(const VcstInstance& inst,
                               const VcstSolution& sol);

// --- connected dominating structure ----------------------------------------

// Find S dominating the terminals plus a tree F spanning S, minimizing
// w(S) + l(F).  Edge lengths must satisfy l(e) <= min endpoint weight.
struct CdsInstance {
  Graph graph;                 // must carry edge lengths
  std::vector<int> terminals;  // sorted, distinct, nonempty

  CdsInstance(Graph g, std::vector<int> ts);
};

struct CdsSolution {
  std::vector<int> domset;  // S, sorted
  std::vector<int> tree;    // edge ids; may be empty when |S| <= 1
  Fixed objective;          // w(S) + l(tree)
};

Verdict validate_cds_solution(const CdsInstance& inst, const CdsSolution& sol);

// --- activation problem -----------------------------------------------------

// Each vertex is assigned an activation level from a finite set W; an edge
// uv appears iff its monotone predicate holds for the chosen pair of levels.
// Minimize the total assigned level subject to the activated subgraph
// connecting all terminals.
struct ActivationInstance {
  Graph graph;
  std::vector<int> terminals;
  std::vector<Fixed> levels;           // sorted ascending, distinct, <= 64
  std::vector<std::vector<std::uint64_t>> tables;
  // tables[e][a] is a bitmask over level indices b: bit b set iff the edge
  // activates when its lower-indexed endpoint has level a and the other
  // endpoint has level b.  Monotonicity is validated on construction.

  ActivationInstance(Graph g, std::vector<int> ts, std::vector<Fixed> lv,
                     std::vector<std::vector<std::uint64_t>> tb);

  bool active(int edge, int level_low, int level_high) const {
    return (tables[edge][level_low] >> level_high) & 1u;
  }
  // Activation test for edge {u,v} with per-vertex level indices.
  bool active_for(int edge, int u, int lu, int v, int lv) const;
};

struct ActivationSolution {
  std::vector<int> level_of;  // level index per vertex
  Fixed objective;            // sum of assigned level values
};

Verdict validate_activation_solution(const ActivationInstance& inst,
                                     const ActivationSolution& sol);

// --- node-weighted Steiner -------------------------------------------------

// Choose X containing the terminals with G[X] connected, minimizing the
// weight of X \ T (terminals are already paid for).
struct NwsInstance {
  Graph graph;
  std::vector<int> terminals;

  NwsInstance(Graph g, std::vector<int> ts);
};

struct NwsSolution {
  std::vector<int> chosen;  // X, sorted, contains the terminals
  std::vector<int> tree;    // spanning tree of G[X], edge ids
  Fixed added_weight;       // weight of chosen minus terminals
};

Verdict validate_nws_solution(const NwsInstance& inst, const NwsSolution& sol);

// --- tree operations ---------------------------------------------------------

// Minimum-weight vertex cover of a tree given by edge ids, by dynamic
// programming.  The tree is rooted at its lowest-index vertex and weight
// ties are broken toward excluding a vertex, so the result is deterministic.
// An empty edge list yields an empty cover of weight zero.  Throws
// InvalidInstanceError on cyclic or disconnected input.
std::pair<std::vector<int>, Fixed> tree_min_vertex_cover(
    const Graph& g, const std::vector<int>& tree_edges);

// Maximum degree of a cover vertex in the tree obtained from F by deleting
// the leaves of F that are not in the cover.  Throws if `cover` does not
// cover every edge of F.
int cover_degree(const Graph& g, const std::vector<int>& tree_edges,
                 const std::vector<int>& cover);

// --- small helpers ------------------------------------------------------------

Fixed weight_sum(const Graph& g, const std::vector<int>& vertices);
Fixed length_sum(const Graph& g, const std::vector<int>& edge_ids);
std::vector<int> tree_vertices(const Graph& g, const std::vector<int>& edge_ids);

}  // namespace vcst
