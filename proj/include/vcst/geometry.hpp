#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vcst/graph.hpp"

namespace vcst {

// Partition of the plane into half-open axis-aligned squares of side
// sqrt(2)/2, cells [k*s, (k+1)*s) x [m*s, (m+1)*s).  A point exactly on a
// cell boundary therefore belongs to the upper/right cell.  Any two points
// in one cell are strictly within distance 1 of each other, so each class
// of a unit-disk graph induces a clique.
struct SquarePartition {
  double side;                                   // sqrt(2)/2
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;  // occupied cells
  std::vector<int> class_of;                     // vertex -> index into cells
  std::vector<std::vector<int>> classes;         // cell -> sorted vertex list
};

// Index of the grid cell containing micro-unit coordinate x, i.e.
// floor(x * sqrt(2) / 1e6), computed exactly.
std::int64_t square_cell_index(std::int64_t x);

// Partitions the vertices of g by grid cell.  Requires coordinates.
SquarePartition square_partition(const Graph& g);

// Number of distinct classes that contain a vertex of N[v] (v included).
int neighborhood_class_count(const Graph& g, const SquarePartition& p, int v);

// Maximum of neighborhood_class_count over all vertices (0 for empty graph).
int max_neighborhood_classes(const Graph& g, const SquarePartition& p);

// floor(2*pi / arccos(alpha/2 + 3/(8*alpha))) for alpha in (1/2, 3/4].
// Throws std::domain_error outside that interval.  Non-increasing in alpha.
int packing_bound(double alpha);

}  // namespace vcst
