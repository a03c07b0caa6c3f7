#include "vcst/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vcst {

namespace {

// exact test for a <= x * sqrt(2), a and x integers
bool le_sqrt2(std::int64_t a, std::int64_t x) {
  if (x == 0) return a <= 0;
  __int128 a2 = (__int128)a * a;
  __int128 two_x2 = 2 * (__int128)x * x;
  if (x > 0) {
    if (a <= 0) return true;
    return a2 <= two_x2;  // sqrt(2) irrational: equality cannot occur
  }
  if (a >= 0) return false;
  return a2 >= two_x2;
}

}  // namespace

std::int64_t square_cell_index(std::int64_t x) {
  // k = floor(x * sqrt(2) / scale):  k*scale <= x*sqrt(2) < (k+1)*scale
  const std::int64_t scale = Fixed::kScale;
  std::int64_t k = static_cast<std::int64_t>(
      std::floor(static_cast<double>(x) * std::sqrt(2.0) /
                 static_cast<double>(scale)));
  while (!le_sqrt2(k * scale, x)) --k;
  while (le_sqrt2((k + 1) * scale, x)) ++k;
  return k;
}

SquarePartition square_partition(const Graph& g) {
  if (!g.has_coords())
    throw InvalidInstanceError("square partition requires coordinates");
  SquarePartition p;
  p.side = std::sqrt(0.5);
  std::map<std::pair<std::int64_t, std::int64_t>, int> cell_index;
  p.class_of.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    std::pair<std::int64_t, std::int64_t> cell{
        square_cell_index(g.coord(v).x), square_cell_index(g.coord(v).y)};
    auto [it, fresh] = cell_index.try_emplace(cell, (int)p.cells.size());
    if (fresh) {
      p.cells.push_back(cell);
      p.classes.emplace_back();
    }
    p.class_of[v] = it->second;
    p.classes[it->second].push_back(v);
  }
  return p;
}

int neighborhood_class_count(const Graph& g, const SquarePartition& p, int v) {
  std::vector<int> cls{p.class_of[v]};
  for (int w : g.neighbors(v)) cls.push_back(p.class_of[w]);
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  return static_cast<int>(cls.size());
}

int max_neighborhood_classes(const Graph& g, const SquarePartition& p) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v)
    best = std::max(best, neighborhood_class_count(g, p, v));
  return best;
}

int packing_bound(double alpha) {
  if (!(alpha > 0.5) || !(alpha <= 0.75))
    throw std::domain_error("packing_bound: alpha must lie in (1/2, 3/4]");
  double arg = alpha / 2.0 + 3.0 / (8.0 * alpha);
  double angle = std::acos(arg);
  return static_cast<int>(std::floor(2.0 * M_PI / angle));
}

}  // namespace vcst
