#pragma once

#include <cstdint>

#include "vcst/io.hpp"

namespace vcst {

// All generators are deterministic in (params, seed): the same call yields
// byte-identical instance files.

struct UdgGenParams {
  int n = 10;
  std::int64_t box_units = 2'500'000;  // square side in micro-units
  std::int64_t weight_lo = 1'000'000;  // vertex weight range, micro-units
  std::int64_t weight_hi = 3'000'000;
  int terminals = 3;      // ignored when spanning is set
  bool spanning = false;  // terminals = every vertex
  bool require_connected = true;
  // vcst, cds (adds lengths = min endpoint weight), or nws
  InstanceKind kind = InstanceKind::Vcst;
};

// Random unit-disk instance with coordinates.  With require_connected the
// point set is resampled until the disk graph is connected.
InstanceFile generate_random_udg(const UdgGenParams& p, std::uint64_t seed);

struct GridGadgetParams {
  int rows = 2;
  int cols = 2;
  int weight_lo = 1;  // whole-unit edge weights
  int weight_hi = 4;
  int terminals = 2;
};

// gadget: every grid edge subdivided by three vertices (the middle one
// carrying the edge weight, its neighbors unbuyable), kind vcst, planar
// unit-disk, n_grid + 3 * m_grid vertices.  source: the grid itself with
// the same weights as edge lengths, kind grid-steiner.  Both describe the
// same optimum.
struct GadgetPair {
  InstanceFile gadget;
  InstanceFile source;
};

GadgetPair generate_grid_gadget(const GridGadgetParams& p, std::uint64_t seed);

struct SetCoverGadgetParams {
  int universe = 5;
  int sets = 4;
};

// gadget: the uniform-weight spanning instance whose cover optimum equals
// the source's minimum number of covering sets (kind vcst).  source: the
// sampled unit-weight set system (kind set-cover).
GadgetPair generate_setcover_gadget(const SetCoverGadgetParams& p,
                                    std::uint64_t seed);

struct PlanarGenParams {
  int n = 10;
  std::int64_t box_units = 3'000'000;
  int weight_lo = 1;  // whole-unit vertex weights keep the level set small
  int weight_hi = 3;
  int terminals = 3;
};

// Delaunay triangulation of random points — planar by construction, with
// coordinates, kind vcst.  Uses exact integer incircle tests; point sets
// with cocircular or all-collinear degeneracies are resampled.
InstanceFile generate_random_planar(const PlanarGenParams& p,
                                    std::uint64_t seed);

}  // namespace vcst
