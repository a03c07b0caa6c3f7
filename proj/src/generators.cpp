#include "vcst/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "vcst/reductions.hpp"
#include "vcst/rng.hpp"

namespace vcst {
namespace {

void check(bool ok, const char* why) {
  if (!ok) throw InvalidInstanceError(why);
}

std::vector<Point> sample_distinct_points(Rng& rng, int n,
                                          std::int64_t box_units) {
  std::vector<Point> pts(n);
  std::set<std::pair<std::int64_t, std::int64_t>> used;
  for (int i = 0; i < n; ++i) {
    do {
      pts[i] = {rng.range(0, box_units), rng.range(0, box_units)};
    } while (!used.insert({pts[i].x, pts[i].y}).second);
  }
  return pts;
}

std::vector<int> sample_terminals(Rng& rng, int n, int count) {
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(verts[i], verts[rng.below(i + 1)]);
  verts.resize(std::max(1, std::min(count, n)));
  std::sort(verts.begin(), verts.end());
  return verts;
}

using Wide = __int128;

Wide orient(const Point& a, const Point& b, const Point& c) {
  return Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
}

// Sign of the incircle determinant for counterclockwise (a, b, c):
// positive iff d lies strictly inside their circumcircle.  Coordinates are
// micro-unit integers, so the arithmetic is exact.
Wide incircle(const Point& a, const Point& b, const Point& c,
              const Point& d) {
  Wide ax = a.x - d.x, ay = a.y - d.y;
  Wide bx = b.x - d.x, by = b.y - d.y;
  Wide cx = c.x - d.x, cy = c.y - d.y;
  Wide a2 = ax * ax + ay * ay;
  Wide b2 = bx * bx + by * by;
  Wide c2 = cx * cx + cy * cy;
  return a2 * (bx * cy - by * cx) - b2 * (ax * cy - ay * cx) +
         c2 * (ax * by - ay * bx);
}

// Delaunay edges by exhaustive triangle filtering: a triangle joins the
// triangulation iff its circumcircle holds no other point; exactly
// cocircular rejections make the attempt degenerate and the caller
// resamples.  Quadratic-by-triple, intended for the small benchmark sizes.
bool delaunay_edges(const std::vector<Point>& pts,
                    std::set<std::pair<int, int>>& out) {
  const int n = static_cast<int>(pts.size());
  if (n == 2) {
    out.insert({0, 1});
    return true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Point a = pts[i], b = pts[j], c = pts[k];
        Wide o = orient(a, b, c);
        if (o == 0) continue;  // collinear triple spans no triangle
        if (o < 0) std::swap(b, c);
        bool empty = true;
        for (int l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          Wide s = incircle(a, b, c, pts[l]);
          if (s == 0) return false;  // cocircular: resample the points
          if (s > 0) empty = false;
        }
        if (empty) {
          out.insert({std::min(i, j), std::max(i, j)});
          out.insert({std::min(j, k), std::max(j, k)});
          out.insert({std::min(i, k), std::max(i, k)});
        }
      }
  return true;
}

InstanceFile wrap_graph(InstanceKind kind, const Graph& g,
                        std::vector<int> terminals, const char* family,
                        std::uint64_t seed) {
  InstanceFile f;
  f.kind = kind;
  f.family = family;
  f.seed = seed;
  f.graph = graph_to_data(g);
  f.terminals = std::move(terminals);
  return f;
}

}  // namespace

InstanceFile generate_random_udg(const UdgGenParams& p, std::uint64_t seed) {
  check(p.n >= 1, "random-udg: n must be positive");
  check(p.box_units >= 1, "random-udg: box side must be positive");
  check(0 <= p.weight_lo && p.weight_lo <= p.weight_hi,
        "random-udg: invalid weight range");
  check(p.spanning || p.terminals >= 1,
        "random-udg: at least one terminal required");
  check(p.kind == InstanceKind::Vcst || p.kind == InstanceKind::Cds ||
            p.kind == InstanceKind::Nws,
        "random-udg: kind must be vcst, cds, or nws");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts = sample_distinct_points(rng, p.n, p.box_units);
    std::vector<Fixed> ws(p.n);
    for (auto& w : ws) w = Fixed::from_units(rng.range(p.weight_lo, p.weight_hi));
    Graph g = build_unit_disk_graph(pts, ws);
    if (p.require_connected &&
        !is_connected_subset(g, std::vector<char>(p.n, 1)))
      continue;
    std::vector<int> ts;
    if (p.spanning) {
      ts.resize(p.n);
      for (int i = 0; i < p.n; ++i) ts[i] = i;
    } else {
      ts = sample_terminals(rng, p.n, p.terminals);
    }
    if (p.kind == InstanceKind::Cds) {
      CdsInstance cds = reduce_vcst_to_cds(VcstInstance(std::move(g), ts));
      return wrap_graph(InstanceKind::Cds, cds.graph, std::move(ts),
                        "random-udg", seed);
    }
    return wrap_graph(p.kind, g, std::move(ts), "random-udg", seed);
  }
  throw InternalError("random-udg: no connected sample in 1000 attempts");
}

GadgetPair generate_grid_gadget(const GridGadgetParams& p,
                                std::uint64_t seed) {
  check(p.rows >= 1 && p.cols >= 1 && p.rows * p.cols >= 2,
        "grid-gadget: grid needs at least two vertices");
  check(1 <= p.weight_lo && p.weight_lo <= p.weight_hi,
        "grid-gadget: invalid weight range");
  check(p.terminals >= 1, "grid-gadget: at least one terminal required");
  Rng rng(seed);
  GraphData d;
  d.n = p.rows * p.cols;
  const std::int64_t step = 4 * Fixed::kScale;
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) d.coords.push_back({step * c, step * r});
  d.weights.assign(d.n, Fixed());
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) {
      int v = r * p.cols + c;
      if (c + 1 < p.cols) d.edges.push_back({v, v + 1});
      if (r + 1 < p.rows) d.edges.push_back({v, v + p.cols});
    }
  Graph grid(std::move(d));
  std::vector<Fixed> edge_weights(grid.m());
  for (auto& w : edge_weights)
    w = Fixed::from_int(rng.range(p.weight_lo, p.weight_hi));
  std::vector<int> terminals = sample_terminals(rng, grid.n(), p.terminals);

  GridGadget gg = gadget_subdivide_grid(grid, edge_weights, terminals);
  GadgetPair pair;
  pair.gadget = wrap_graph(InstanceKind::Vcst, gg.instance.graph,
                           gg.instance.terminals, "grid-gadget", seed);
  GraphData src = graph_to_data(grid);
  src.lengths = edge_weights;
  pair.source.kind = InstanceKind::GridSteiner;
  pair.source.family = "grid-gadget";
  pair.source.seed = seed;
  pair.source.graph = std::move(src);
  pair.source.terminals = terminals;
  return pair;
}

GadgetPair generate_setcover_gadget(const SetCoverGadgetParams& p,
                                    std::uint64_t seed) {
  check(p.universe >= 1, "setcover-gadget: universe must be nonempty");
  check(p.sets >= 1, "setcover-gadget: at least one set required");
  Rng rng(seed);
  std::vector<std::vector<int>> family(p.sets);
  for (auto& set : family) {
    for (int e = 0; e < p.universe; ++e)
      if (rng.coin()) set.push_back(e);
    if (set.empty()) set.push_back(static_cast<int>(rng.below(p.universe)));
  }
  // patch coverage so the instance is always feasible
  std::vector<char> covered(p.universe, 0);
  for (const auto& set : family)
    for (int e : set) covered[e] = 1;
  for (int e = 0; e < p.universe; ++e) {
    if (covered[e]) continue;
    auto& set = family[rng.below(p.sets)];
    set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  }

  SetCoverGadget gadget = gadget_from_set_cover(p.universe, family);
  GadgetPair pair;
  pair.gadget = wrap_graph(InstanceKind::Vcst, gadget.instance.graph,
                           gadget.instance.terminals, "setcover-gadget", seed);
  pair.source.kind = InstanceKind::SetCover;
  pair.source.family = "setcover-gadget";
  pair.source.seed = seed;
  pair.source.universe = p.universe;
  for (auto& set : family)
    pair.source.sets.push_back({std::move(set), Fixed::from_int(1)});
  return pair;
}

InstanceFile generate_random_planar(const PlanarGenParams& p,
                                    std::uint64_t seed) {
  check(p.n >= 1, "random-planar: n must be positive");
  check(p.n <= 64, "random-planar: triangle filtering capped at 64 points");
  check(p.box_units >= 1, "random-planar: box side must be positive");
  check(1 <= p.weight_lo && p.weight_lo <= p.weight_hi,
        "random-planar: invalid weight range");
  check(p.terminals >= 1, "random-planar: at least one terminal required");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts = sample_distinct_points(rng, p.n, p.box_units);
    std::set<std::pair<int, int>> edge_set;
    if (!delaunay_edges(pts, edge_set)) continue;
    GraphData d;
    d.n = p.n;
    d.edges.assign(edge_set.begin(), edge_set.end());
    d.coords = pts;
    for (int i = 0; i < p.n; ++i)
      d.weights.push_back(Fixed::from_int(rng.range(p.weight_lo, p.weight_hi)));
    Graph g(std::move(d));
    if (p.n > 1 && !is_connected_subset(g, std::vector<char>(p.n, 1)))
      continue;  // all points collinear, or similar degeneracy
    std::vector<int> ts = sample_terminals(rng, p.n, p.terminals);
    return wrap_graph(InstanceKind::Vcst, g, std::move(ts), "random-planar",
                      seed);
  }
  throw InternalError("random-planar: no usable sample in 1000 attempts");
}

}  // namespace vcst
