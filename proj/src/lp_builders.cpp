#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "vcst/fixed.hpp"
#include "vcst/lp.hpp"

namespace vcst {

namespace {

double finite_value(const Fixed& f, const char* what) {
  if (f.is_infinite())
    throw InvalidInstanceError(std::string("infinite ") + what +
                               " cannot enter a linear model");
  return f.to_double();
}

std::string flow_name(int commodity, int tail, int head) {
  return "f" + std::to_string(commodity) + "_" + std::to_string(tail) + "_" +
         std::to_string(head);
}

// Adds the two arc variables of every edge for one commodity and the
// commodity's conservation and capacity rows.  `demand_var` couples the
// sink row to -demand_var (or to the constant `demand` when demand_var is
// -1).  Returns the 2m arc variable indices, edge-major.
std::vector<int> add_commodity(LpModel& model, const Graph& g, int root,
                               int sink, int demand_var, double demand,
                               const std::vector<int>& y_var) {
  const int m = g.m();
  std::vector<int> arc(2 * m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    arc[2 * e] = model.add_variable(flow_name(sink, u, v), VarKind::Flow, 0.0,
                                    sink, e, 0);
    arc[2 * e + 1] = model.add_variable(flow_name(sink, v, u), VarKind::Flow,
                                        0.0, sink, e, 1);
  }
  // Flow balance at every vertex except the root (whose row is implied by
  // the others and would only add degeneracy).
  for (int u = 0; u < g.n(); ++u) {
    if (u == root) continue;
    std::vector<std::pair<int, double>> terms;
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edge(e);
      if (a == u) {
        terms.push_back({arc[2 * e + 1], 1.0});  // b -> a enters u
        terms.push_back({arc[2 * e], -1.0});     // a -> b leaves u
      } else if (b == u) {
        terms.push_back({arc[2 * e], 1.0});
        terms.push_back({arc[2 * e + 1], -1.0});
      }
    }
    double rhs = 0.0;
    if (u == sink) {
      if (demand_var >= 0)
        terms.push_back({demand_var, -1.0});
      else
        rhs = demand;
    }
    model.add_constraint(
        "bal" + std::to_string(sink) + "_" + std::to_string(u),
        RowSense::Equal, std::move(terms), rhs);
  }
  for (int e = 0; e < m; ++e)
    model.add_constraint(
        "cap" + std::to_string(sink) + "_" + std::to_string(e),
        RowSense::LessEqual,
        {{arc[2 * e], 1.0}, {arc[2 * e + 1], 1.0}, {y_var[e], -1.0}}, 0.0);
  return arc;
}

}  // namespace

LpModel build_cds_flow_lp(const CdsInstance& inst, int root) {
  const Graph& g = inst.graph;
  if (root < 0 || root >= g.n())
    throw InvalidInstanceError("root vertex out of range");
  LpModel model;
  std::vector<int> x_var(g.n()), y_var(g.m());
  for (int v = 0; v < g.n(); ++v)
    x_var[v] = model.add_variable("x" + std::to_string(v),
                                  VarKind::VertexSelect,
                                  finite_value(g.weight(v), "weight"), v);
  for (int e = 0; e < g.m(); ++e)
    y_var[e] = model.add_variable("y" + std::to_string(e), VarKind::EdgeUse,
                                  finite_value(g.length(e), "length"), e);
  // Closed-neighborhood domination of every terminal.
  for (int t : inst.terminals) {
    std::vector<std::pair<int, double>> terms{{x_var[t], 1.0}};
    for (int u : g.neighbors(t)) terms.push_back({x_var[u], 1.0});
    model.add_constraint("dom" + std::to_string(t), RowSense::GreaterEqual,
                         std::move(terms), 1.0);
  }
  // One commodity per non-root vertex, shipping x(v) units from the root.
  for (int v = 0; v < g.n(); ++v) {
    if (v == root) continue;
    add_commodity(model, g, root, v, x_var[v], 0.0, y_var);
  }
  return model;
}

CdsFlowPoint unpack_cds_point(const LpModel& model, const Graph& g,
                              const std::vector<double>& values) {
  CdsFlowPoint pt;
  pt.x.assign(g.n(), 0.0);
  pt.y.assign(g.m(), 0.0);
  pt.flow.assign(g.n(), std::vector<std::array<double, 2>>(
                            g.m(), std::array<double, 2>{0.0, 0.0}));
  for (int j = 0; j < model.num_variables(); ++j) {
    const LpVariable& var = model.variable(j);
    switch (var.kind) {
      case VarKind::VertexSelect: pt.x[var.tag1] = values[j]; break;
      case VarKind::EdgeUse: pt.y[var.tag1] = values[j]; break;
      case VarKind::Flow: pt.flow[var.tag1][var.tag2][var.tag3] = values[j]; break;
      case VarKind::Other: break;
    }
  }
  return pt;
}

std::vector<double> pack_cds_point(const LpModel& model,
                                   const CdsFlowPoint& point) {
  std::vector<double> values(model.num_variables(), 0.0);
  for (int j = 0; j < model.num_variables(); ++j) {
    const LpVariable& var = model.variable(j);
    switch (var.kind) {
      case VarKind::VertexSelect: values[j] = point.x[var.tag1]; break;
      case VarKind::EdgeUse: values[j] = point.y[var.tag1]; break;
      case VarKind::Flow: values[j] = point.flow[var.tag1][var.tag2][var.tag3]; break;
      case VarKind::Other: break;
    }
  }
  return values;
}

SetCoverLp build_setcover_lp(const CdsInstance& inst,
                             const SquarePartition& partition,
                             const std::vector<double>& xstar, double theta) {
  const Graph& g = inst.graph;
  if (static_cast<int>(partition.class_of.size()) != g.n() ||
      static_cast<int>(xstar.size()) != g.n())
    throw InvalidInstanceError("partition or point size mismatch");
  if (!(theta > 0))
    throw InvalidInstanceError("theta must be positive");
  SetCoverLp out;
  const double threshold = 1.0 / theta - 1e-9;
  std::vector<char> heavy_class(partition.classes.size(), 0);
  for (int i = 0; i < static_cast<int>(partition.classes.size()); ++i) {
    double mass = 0.0;
    for (int v : partition.classes[i]) mass += xstar[v];
    if (mass >= threshold) {
      heavy_class[i] = 1;
      out.heavy.push_back(i);
    }
  }
  std::vector<int> x_var(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (heavy_class[partition.class_of[v]])
      x_var[v] = out.model.add_variable("x" + std::to_string(v),
                                        VarKind::VertexSelect,
                                        finite_value(g.weight(v), "weight"), v);
  for (int t : inst.terminals) {
    std::vector<std::pair<int, double>> terms;
    if (x_var[t] >= 0) terms.push_back({x_var[t], 1.0});
    for (int u : g.neighbors(t))
      if (x_var[u] >= 0) terms.push_back({x_var[u], 1.0});
    if (terms.empty())
      throw InternalError(
          "terminal sees no heavy class; contradicts the heavy-class "
          "guarantee for a domination-feasible point");
    out.model.add_constraint("cover" + std::to_string(t),
                             RowSense::GreaterEqual, std::move(terms), 1.0);
  }
  return out;
}

LpModel build_steiner_flow_lp(const Graph& g, const std::vector<Fixed>& lengths,
                              int root,
                              const std::vector<int>& representatives) {
  if (static_cast<int>(lengths.size()) != g.m())
    throw InvalidInstanceError("one length per edge required");
  if (root < 0 || root >= g.n())
    throw InvalidInstanceError("root vertex out of range");
  std::set<int> seen;
  for (int r : representatives) {
    if (r < 0 || r >= g.n())
      throw InvalidInstanceError("representative out of range");
    if (!seen.insert(r).second)
      throw InvalidInstanceError("representatives must be distinct");
  }
  LpModel model;
  std::vector<int> y_var(g.m());
  for (int e = 0; e < g.m(); ++e)
    y_var[e] = model.add_variable("y" + std::to_string(e), VarKind::EdgeUse,
                                  finite_value(lengths[e], "length"), e);
  for (int r : representatives) {
    if (r == root) continue;  // unit flow from the root to itself is vacuous
    add_commodity(model, g, root, r, -1, 1.0, y_var);
  }
  return model;
}

std::vector<double> pack_steiner_point(const LpModel& model,
                                       const std::vector<int>& representatives,
                                       const SteinerFlowPoint& point) {
  std::vector<int> rep_pos;  // commodity vertex -> index in `representatives`
  int max_rep = -1;
  for (int r : representatives) max_rep = std::max(max_rep, r);
  rep_pos.assign(max_rep + 1, -1);
  for (int i = 0; i < static_cast<int>(representatives.size()); ++i)
    rep_pos[representatives[i]] = i;
  std::vector<double> values(model.num_variables(), 0.0);
  for (int j = 0; j < model.num_variables(); ++j) {
    const LpVariable& var = model.variable(j);
    if (var.kind == VarKind::EdgeUse) {
      values[j] = point.y[var.tag1];
    } else if (var.kind == VarKind::Flow) {
      int pos = var.tag1 <= max_rep ? rep_pos[var.tag1] : -1;
      if (pos < 0)
        throw InvalidInstanceError("flow commodity is not a representative");
      values[j] = point.flow[pos][var.tag2][var.tag3];
    }
  }
  return values;
}

SteinerFlowPoint reroute_flow(const Graph& g, const CdsFlowPoint& star,
                              const SquarePartition& partition,
                              const std::vector<int>& representatives,
                              int root, double theta) {
  const int m = g.m();
  if (static_cast<int>(partition.class_of.size()) != g.n())
    throw InvalidInstanceError("partition size mismatch");
  SteinerFlowPoint out;
  out.y.assign(m, 0.0);
  out.flow.assign(representatives.size(),
                  std::vector<std::array<double, 2>>(
                      m, std::array<double, 2>{0.0, 0.0}));
  // Augmented capacities start from y* and absorb the clique-edge boosts.
  std::vector<double> y_aug = star.y;
  for (int i = 0; i < static_cast<int>(representatives.size()); ++i) {
    int rep = representatives[i];
    if (rep == root) continue;  // no commodity in the Steiner model
    auto& merged = out.flow[i];
    double value = 0.0;  // net mass shipped into the representative
    for (int v : partition.classes[partition.class_of[rep]]) {
      double mass = star.x[v];
      if (v == rep) {
        if (v != root)
          for (int e = 0; e < m; ++e) {
            merged[e][0] += star.flow[v][e][0];
            merged[e][1] += star.flow[v][e][1];
          }
        continue;
      }
      if (mass <= 1e-12) continue;
      std::optional<int> link = g.edge_id(v, rep);
      if (!link)
        throw InternalError("partition class lacks the clique edge " +
                            std::to_string(v) + "-" + std::to_string(rep));
      if (v != root)
        for (int e = 0; e < m; ++e) {
          merged[e][0] += star.flow[v][e][0];
          merged[e][1] += star.flow[v][e][1];
        }
      // The class member's commodity now continues over the clique edge
      // into the representative (the root's mass is injected directly).
      int dir = g.edge(*link).first == v ? 0 : 1;
      merged[*link][dir] += mass;
      y_aug[*link] += mass;
    }
    // Cancel opposite arc flows; this only lowers capacity usage.
    for (int e = 0; e < m; ++e) {
      double c = std::min(merged[e][0], merged[e][1]);
      merged[e][0] -= c;
      merged[e][1] -= c;
    }
    // Normalize to a unit commodity using the realized inflow.
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edge(e);
      if (b == rep) value += merged[e][0] - merged[e][1];
      if (a == rep) value += merged[e][1] - merged[e][0];
    }
    if (value <= 1e-12)
      throw InternalError("heavy class carries no flow mass to normalize");
    for (int e = 0; e < m; ++e) {
      merged[e][0] /= value;
      merged[e][1] /= value;
    }
  }
  // Capacities: the scaled augmented y*, raised where a normalized
  // commodity actually needs more.
  for (int e = 0; e < m; ++e) {
    double need = theta * y_aug[e];
    for (const auto& commodity : out.flow)
      need = std::max(need, commodity[e][0] + commodity[e][1]);
    out.y[e] = need;
  }
  return out;
}

}  // namespace vcst
