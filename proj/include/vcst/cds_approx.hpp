#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcst/exact.hpp"
#include "vcst/lp.hpp"
#include "vcst/problems.hpp"

namespace vcst {

// --- building blocks ----------------------------------------------------------

// Weighted greedy cover: repeatedly takes the set with the smallest
// weight-per-newly-covered-element ratio (exact integer comparison, ties
// toward the lowest set index).  Infinite-weight sets are never taken.
// Throws InfeasibleError when an element is uncoverable.
SetCoverSolution greedy_set_cover(int universe_size,
                                  const std::vector<WeightedSet>& family);

// Steiner tree heuristic: all-pairs shortest paths among the terminals,
// minimum spanning tree of that metric completion, expansion of its edges
// into the underlying shortest paths, removal of cycles, and pruning of
// non-terminal leaves.  The result spans the terminals and its length is
// at most twice the Steiner optimum.  Edges of infinite length are
// unusable; disconnected terminals raise InfeasibleError.  Deterministic:
// lowest-index tie-breaks throughout.
std::vector<int> steiner_2approx_metric_mst(const Graph& g,
                                            const std::vector<Fixed>& lengths,
                                            const std::vector<int>& terminals);

enum class SetCoverBackend { Exact, Greedy };

// Branch-and-bound is the default up to 18 candidate sets, greedy above.
SetCoverBackend default_backend(int family_size);

// --- spanning variant (every vertex a terminal) --------------------------------

struct SpanningReport {
  CdsSolution solution;
  double domset_lp = 0.0;  // fractional domination lower bound for w(S)
  double beta_cert = 1.0;  // w(S) / domset_lp, certified per instance
};

// Dominating set via the set-cover backend, then a Steiner tree spanning
// it.  The certified factor of the output is beta_cert * 3 (the Steiner
// step contributes a factor 2, plus the dominating set itself).
// Requires T = V; other instances raise InvalidInstanceError.
SpanningReport solve_cds_spanning_case(const CdsInstance& inst,
                                       SetCoverBackend backend);

// --- rounding pipeline ----------------------------------------------------------

struct RoundingReport {
  int root = -1;
  double xstar_weight = 0.0;   // sum w(v) x*(v) of the flow relaxation optimum
  double ystar_length = 0.0;   // sum l(e) y*(e)
  double lp1_objective = 0.0;  // xstar_weight + ystar_length
  std::vector<int> heavy;      // heavy partition classes
  double cover_weight = 0.0;   // w(S)
  double setcover_lp = 0.0;    // optimum of the restricted domination LP
  double gamma_cert = 1.0;     // w(S) / setcover_lp, certified per instance
  double steiner_length = 0.0;  // l(F)
  double pendant_length = 0.0;  // l(F')
  double objective = 0.0;       // w(S) + l(F) + l(F')
  // Certificates, each checked on this very instance.
  bool cover_scale_ok = false;    // theta x* feasible for the restricted
                                  // domination LP, whose optimum stays within
                                  // theta * xstar_weight
  bool reroute_ok = false;        // rerouted flow feasible for the Steiner
                                  // relaxation, cost within theta * lp1
  bool steiner_factor_ok = false; // l(F) within twice the relaxation optimum
  bool pendant_ok = false;        // l(F') <= w(S), checked exactly
  bool all_ok() const {
    return cover_scale_ok && reroute_ok && steiner_factor_ok && pendant_ok;
  }
  std::string to_json() const;
};

// One rounding run for a fixed root: solve the rooted flow relaxation,
// restrict to heavy classes, cover the terminals inside them with the
// chosen backend, connect the root and the class representatives (lowest
// index per class) with the Steiner heuristic, and attach every uncovered
// cover vertex to its class representative by a clique (pendant) edge.
// The instance graph must carry coordinates.  Infeasibility of the rooted
// relaxation raises InfeasibleError.
std::pair<CdsSolution, RoundingReport> solve_cds_rounding(
    const CdsInstance& inst, int root, SetCoverBackend backend);

// Runs the rounding pipeline for every root and keeps the solution with
// the smallest objective (ties toward the lowest root).  Roots whose
// rooted relaxation is infeasible are skipped; if all are, the instance
// itself is infeasible.  With `restrict_roots` set and more than 40
// vertices, only terminals and heavy-class members of a first probe run
// are tried (a performance heuristic; off by default).
std::pair<CdsSolution, RoundingReport> solve_cds_all_roots(
    const CdsInstance& inst, SetCoverBackend backend,
    bool restrict_roots = false);

}  // namespace vcst
