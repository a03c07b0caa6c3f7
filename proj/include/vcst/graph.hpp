#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vcst/fixed.hpp"

namespace vcst {

// Planar point with coordinates in micro-units (Fixed semantics), so that
// the unit-disk edge rule can be evaluated exactly in integer arithmetic.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Exact test: Euclidean distance between p and q is <= 1.
bool within_unit_distance(const Point& p, const Point& q);

using Edge = std::pair<int, int>;

// Plain data used to construct a Graph.
struct GraphData {
  int n = 0;
  std::vector<Edge> edges;          // endpoints in [0, n), u != v
  std::vector<Fixed> weights;       // size n, nonnegative (may be inf)
  std::vector<Fixed> lengths;       // empty, or one nonnegative value per edge
  std::vector<Point> coords;        // empty, or one point per vertex
  bool unit_disk = false;           // if set, edges must equal the disk rule
};

// Undirected simple graph with vertex weights and optional edge lengths and
// coordinates.  Immutable after construction; the constructor canonicalizes
// edges as (min,max) sorted lexicographically and validates all invariants.
class Graph {
 public:
  explicit Graph(GraphData d);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(int e) const { return edges_[e]; }
  const Fixed& weight(int v) const { return weights_[v]; }
  const std::vector<Fixed>& weights() const { return weights_; }
  bool has_lengths() const { return !lengths_.empty(); }
  const Fixed& length(int e) const { return lengths_[e]; }
  const std::vector<Fixed>& lengths() const { return lengths_; }
  bool has_coords() const { return !coords_.empty(); }
  const Point& coord(int v) const { return coords_[v]; }
  const std::vector<Point>& coords() const { return coords_; }
  bool is_unit_disk() const { return unit_disk_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::optional<int> edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Fixed> weights_;
  std::vector<Fixed> lengths_;
  std::vector<Point> coords_;
  bool unit_disk_;
  std::vector<std::vector<int>> adj_;
};

// Builds the unit-disk graph of the given points: edge iff distance <= 1,
// evaluated exactly.  Throws on negative weights or size mismatch.
Graph build_unit_disk_graph(const std::vector<Point>& points,
                            const std::vector<Fixed>& weights);

// Connectivity helpers over explicit vertex subsets. `in_set` marks the
// vertices considered; edges are those of g with both ends marked.
bool is_connected_subset(const Graph& g, const std::vector<char>& in_set);

// Connected component (vertex list, sorted) of `start` in the subgraph
// induced by `in_set`.
std::vector<int> component_of(const Graph& g, const std::vector<char>& in_set,
                              int start);

// All connected components of the induced subgraph, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> components(const Graph& g,
                                         const std::vector<char>& in_set);

// Deterministic BFS spanning tree of the component of `start` inside
// `in_set`; neighbors are visited in increasing index order.  Returns edge
// ids of g.
std::vector<int> bfs_tree(const Graph& g, const std::vector<char>& in_set,
                          int start);

// Enumerates every spanning tree of the subgraph induced by `vertices`
// (which must be distinct).  The callback receives edge ids of g.  Intended
// for small instances; enumeration order is deterministic.
void for_each_spanning_tree(const Graph& g, const std::vector<int>& vertices,
                            const std::function<void(const std::vector<int>&)>& fn);

// Iteratively removes degree-<=1 vertices that are not marked `keep` from a
// tree given as edge ids; returns the surviving edge ids (a minimal tree
// whose leaves are all marked).
std::vector<int> prune_tree_leaves(const Graph& g, const std::vector<int>& tree_edges,
                                   const std::vector<char>& keep);

}  // namespace vcst
