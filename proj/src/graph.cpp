#include "vcst/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace vcst {

bool within_unit_distance(const Point& p, const Point& q) {
  __int128 dx = p.x - q.x;
  __int128 dy = p.y - q.y;
  __int128 scale = Fixed::kScale;
  return dx * dx + dy * dy <= scale * scale;
}

Graph::Graph(GraphData d)
    : n_(d.n),
      edges_(std::move(d.edges)),
      weights_(std::move(d.weights)),
      lengths_(std::move(d.lengths)),
      coords_(std::move(d.coords)),
      unit_disk_(d.unit_disk) {
  if (n_ < 0) throw InvalidInstanceError("negative vertex count");
  if (static_cast<int>(weights_.size()) != n_)
    throw InvalidInstanceError("weight list size mismatch");
  for (int v = 0; v < n_; ++v)
    if (!weights_[v].is_infinite() && weights_[v] < Fixed())
      throw InvalidInstanceError("negative vertex weight");
  if (!coords_.empty() && static_cast<int>(coords_.size()) != n_)
    throw InvalidInstanceError("coordinate list size mismatch");
  if (!lengths_.empty() && lengths_.size() != edges_.size())
    throw InvalidInstanceError("length list size mismatch");

  // canonicalize edge direction, then sort edges together with lengths
  std::vector<int> order(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& [u, v] = edges_[e];
    if (u == v) throw InvalidInstanceError("self loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InvalidInstanceError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    order[e] = static_cast<int>(e);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return edges_[a] < edges_[b]; });
  std::vector<Edge> es(edges_.size());
  std::vector<Fixed> ls(lengths_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    es[i] = edges_[order[i]];
    if (!lengths_.empty()) ls[i] = lengths_[order[i]];
  }
  edges_ = std::move(es);
  lengths_ = std::move(ls);
  for (std::size_t e = 1; e < edges_.size(); ++e)
    if (edges_[e] == edges_[e - 1]) throw InvalidInstanceError("parallel edge");
  for (const Fixed& l : lengths_)
    if (!l.is_infinite() && l < Fixed())
      throw InvalidInstanceError("negative edge length");

  if (unit_disk_) {
    if (coords_.empty())
      throw InvalidInstanceError("unit-disk graph without coordinates");
    std::size_t e = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        bool close = within_unit_distance(coords_[u], coords_[v]);
        bool listed = e < edges_.size() && edges_[e] == Edge{u, v};
        if (listed) ++e;
        if (close != listed)
          throw InvalidInstanceError("edge set does not match unit-disk rule");
      }
  }

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it != edges_.end() && *it == Edge{u, v})
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

Graph build_unit_disk_graph(const std::vector<Point>& points,
                            const std::vector<Fixed>& weights) {
  GraphData d;
  d.n = static_cast<int>(points.size());
  d.coords = points;
  d.weights = weights;
  d.unit_disk = true;
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v)
      if (within_unit_distance(points[u], points[v])) d.edges.push_back({u, v});
  return Graph(std::move(d));
}

bool is_connected_subset(const Graph& g, const std::vector<char>& in_set) {
  int start = -1, total = 0;
  for (int v = 0; v < g.n(); ++v)
    if (in_set[v]) {
      if (start < 0) start = v;
      ++total;
    }
  if (total <= 1) return true;
  return static_cast<int>(component_of(g, in_set, start).size()) == total;
}

std::vector<int> component_of(const Graph& g, const std::vector<char>& in_set,
                              int start) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> queue{start}, out;
  seen[start] = 1;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    out.push_back(u);
    for (int w : g.neighbors(u))
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> components(const Graph& g,
                                         const std::vector<char>& in_set) {
  std::vector<char> seen(g.n(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.n(); ++v) {
    if (!in_set[v] || seen[v]) continue;
    std::vector<int> comp = component_of(g, in_set, v);
    for (int u : comp) seen[u] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> bfs_tree(const Graph& g, const std::vector<char>& in_set,
                          int start) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> tree;
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!in_set[w] || seen[w]) continue;
      seen[w] = 1;
      tree.push_back(*g.edge_id(u, w));
      q.push(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace {

// disjoint-set forest with path halving, rebuilt per enumeration
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

void enumerate_trees(const Graph& g, const std::vector<int>& edge_ids,
                     std::size_t idx, int needed, Dsu& dsu,
                     std::vector<int>& chosen,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (needed == 0) {
    fn(chosen);
    return;
  }
  if (edge_ids.size() - idx < static_cast<std::size_t>(needed)) return;
  int e = edge_ids[idx];
  auto [u, v] = g.edge(e);
  int ru = dsu.find(u), rv = dsu.find(v);
  if (ru != rv) {
    Dsu saved = dsu;
    dsu.parent[ru] = rv;
    chosen.push_back(e);
    enumerate_trees(g, edge_ids, idx + 1, needed - 1, dsu, chosen, fn);
    chosen.pop_back();
    dsu = saved;
  }
  enumerate_trees(g, edge_ids, idx + 1, needed, dsu, chosen, fn);
}

}  // namespace

void for_each_spanning_tree(
    const Graph& g, const std::vector<int>& vertices,
    const std::function<void(const std::vector<int>&)>& fn) {
  if (vertices.empty()) return;
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size())
    throw InvalidInstanceError("duplicate vertex in spanning-tree enumeration");
  std::vector<int> edge_ids;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (vs.count(u) && vs.count(v)) edge_ids.push_back(e);
  }
  if (vertices.size() == 1) {
    fn({});
    return;
  }
  Dsu dsu(g.n());
  std::vector<int> chosen;
  enumerate_trees(g, edge_ids, 0, static_cast<int>(vertices.size()) - 1, dsu,
                  chosen, fn);
}

std::vector<int> prune_tree_leaves(const Graph& g,
                                   const std::vector<int>& tree_edges,
                                   const std::vector<char>& keep) {
  std::vector<char> alive(tree_edges.size(), 1);
  std::map<int, std::vector<std::size_t>> incident;  // vertex -> positions
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    auto [u, v] = g.edge(tree_edges[i]);
    incident[u].push_back(i);
    incident[v].push_back(i);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, inc] : incident) {
      if (keep[v]) continue;
      std::size_t live = 0, last = 0;
      for (std::size_t i : inc)
        if (alive[i]) {
          ++live;
          last = i;
        }
      if (live == 1) {
        alive[last] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < tree_edges.size(); ++i)
    if (alive[i]) out.push_back(tree_edges[i]);
  return out;
}

}  // namespace vcst
