#pragma once

#include <array>
#include <vector>

#include "vcst/problems.hpp"

namespace vcst {

// --- cover weighting as an activation problem --------------------------------

// Encodes a VC-weighted instance as an activation instance over the level
// set {0} plus all vertex weights: edge uv activates at levels (i, j) iff
// i >= w(u) or j >= w(v).  A minimum activating assignment has the same
// objective as the VC-weighted optimum.  Throws when the level set would
// exceed the 64-entry cap.
ActivationInstance encode_vcst_as_activation(const VcstInstance& inst);

// --- activation -> node-weighted Steiner --------------------------------------

// A node-weighted instance produced from an activation instance, together
// with the origin of every reduced vertex.
struct NwsReduction {
  NwsInstance instance;
  std::vector<int> origin_vertex;  // original vertex per reduced vertex
  std::vector<int> origin_level;   // level index per copy; -1 for anchors
};

// Builds the copy graph: vertex v gets one copy per level that can activate
// some incident edge (plus the value-zero level, and every level if v is a
// terminal); copy v_i weighs levels[i], and copies u_i, v_j of adjacent
// vertices are joined iff the edge activates at (i, j).  Each terminal gets
// a weight-0 anchor vertex adjacent to all its copies; the anchors are the
// terminals of the reduced instance and occupy ids 0..|T|-1.
NwsReduction reduce_activation_to_nws(const ActivationInstance& inst);

// Result of lifting a Steiner tree of the reduced graph back to levels.
// With no flag set the solution objective equals the tree's vertex weight;
// not_minimal or multi_copy downgrade that to <=, and level_floor (only
// possible when the smallest level is nonzero) may push it above.
struct ActivationLift {
  ActivationSolution solution;
  bool not_minimal = false;  // the tree has a removable non-anchor leaf
  bool multi_copy = false;   // the tree contains two copies of one vertex
  bool level_floor = false;  // a copyless vertex was assigned the smallest
                             // level, which is nonzero
};

// Lifts a Steiner tree of the reduced graph (edge ids, spanning the
// anchors) to per-vertex levels: every vertex takes the highest level among
// its copies in the tree, and the smallest level when it has none.
ActivationLift lift_nws_to_activation(const ActivationInstance& original,
                                      const NwsReduction& red,
                                      const std::vector<int>& tree_edges);

// --- cover weighting -> connected domination ----------------------------------

// Same graph and terminals, with edge lengths l(uv) = min{w(u), w(v)}.
CdsInstance reduce_vcst_to_cds(const VcstInstance& inst);

// Turns a feasible connected-domination solution into a tree-plus-cover
// solution: terminals missing from the tree are attached to their
// lowest-index dominating neighbor, and every tree edge contributes its
// lighter endpoint (ties toward the lower index) to the cover.  The
// resulting objective never exceeds the domination objective.
VcstSolution lift_cds_to_vcst(const VcstInstance& inst, const CdsSolution& cds);

// --- hardness gadgets ----------------------------------------------------------

// Uniform-weight spanning instance whose cover optimum equals the minimum
// number of sets covering the universe.  Vertices 0..universe-1 are the
// elements; vertex universe+j represents set j, adjacent to its elements
// and to every other set vertex; every vertex is a terminal.
struct SetCoverGadget {
  VcstInstance instance;
  int universe_size = 0;
  std::vector<std::vector<int>> family;  // sorted element lists

  int set_vertex(int set_index) const { return universe_size + set_index; }

  // A covering subfamily becomes a spanning tree plus a cover of equal
  // size: each element hangs off its first chosen set, and the set vertices
  // form a star centered at the lowest chosen one.
  VcstSolution cover_to_solution(const std::vector<int>& chosen_sets) const;

  // A feasible solution becomes a covering subfamily of no larger size:
  // while the cover contains an element vertex, exchange it for its first
  // set neighbor on the tree, rerouting the element's other tree edges
  // through that neighbor.
  std::vector<int> solution_to_cover(const VcstSolution& sol) const;
};

SetCoverGadget gadget_from_set_cover(
    int universe_size, const std::vector<std::vector<int>>& family);

// Subdivides every edge of a 4-spaced grid graph with three unit-spaced
// vertices i, j, k; grid endpoints keep weight 0, i and k weigh infinity,
// and j weighs the grid edge weight.  The output is a planar unit-disk
// instance (grid vertices keep their ids) whose cover optimum equals the
// edge-weighted Steiner optimum of the grid.
struct GridGadget {
  VcstInstance instance;
  std::vector<std::array<int, 3>> subdivision;  // (i, j, k) ids per grid edge
};

GridGadget gadget_subdivide_grid(const Graph& grid,
                                 const std::vector<Fixed>& edge_weights,
                                 const std::vector<int>& terminals);

}  // namespace vcst
