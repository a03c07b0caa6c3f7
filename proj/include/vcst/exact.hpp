#pragma once

#include <utility>
#include <vector>

#include "vcst/problems.hpp"

namespace vcst {

// Exact solvers for desk-scale instances.  All of them enumerate
// deterministically and break objective ties toward the lexicographically
// smallest solution, so repeated runs return identical structures.

// Optimal solution by enumeration of candidate covers (subsets of the
// finite-weight vertices, ordered by popcount then numeric value).  A cover
// candidate U is feasible iff the terminals lie in one component of the
// subgraph of edges with an endpoint in U.  |V| <= 24.
// Throws InfeasibleError when the terminals cannot be connected, or can be
// connected only through infinite-weight vertices.
VcstSolution solve_vcst_exact(const VcstInstance& inst);

// Independent oracle: minimum over all connected vertex supersets of the
// terminals and all spanning trees of the induced subgraph of the tree's
// minimum-weight vertex cover.  |V| <= 9.  Returns the objective only.
Fixed solve_vcst_exact_crosscheck(const VcstInstance& inst);

// Minimum-length edge-weighted Steiner tree (Dreyfus-Wagner dynamic
// program); the graph must carry lengths and |terminals| <= 12.
// Returns (edge ids, total length).
std::pair<std::vector<int>, Fixed> solve_edge_steiner_exact(
    const Graph& g, const std::vector<int>& terminals);

// Optimal connected-domination solution.  |V| <= 18.  Enumerates dominating
// sets S of the terminals together with the cheapest tree spanning S (the
// minimum over connected supersets of S of the induced MST).
CdsSolution solve_cds_exact(const CdsInstance& inst);

// Optimal node-weighted Steiner solution by enumeration of finite-weight
// vertex subsets containing the terminals whose induced subgraph is
// connected.  |V| <= 24.  Throws InfeasibleError when no such subset exists.
NwsSolution solve_nws_exact(const NwsInstance& inst);

struct WeightedSet {
  std::vector<int> elements;
  Fixed weight;
};

struct SetCoverSolution {
  std::vector<int> chosen;  // indices into the family, sorted
  Fixed weight;
};

// Optimal weighted set cover by branch and bound; |family| <= 22 and
// universe size <= 64.  Infinite-weight sets are never selected.
SetCoverSolution solve_set_cover_exact(int universe_size,
                                       const std::vector<WeightedSet>& family);

// Optimal activation levels by enumeration of every assignment vector
// (lexicographically smallest optimum); |levels|^|V| <= 2^20.  Throws
// InfeasibleError when no assignment connects the terminals.
ActivationSolution solve_activation_exact(const ActivationInstance& inst);

}  // namespace vcst
