#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcst/geometry.hpp"
#include "vcst/graph.hpp"
#include "vcst/problems.hpp"

namespace vcst {

// --- model -------------------------------------------------------------------

// Role of a model variable.  Flow variables carry (commodity vertex, edge
// id, direction) in their tags; direction 0 is the arc from the lower
// endpoint of the edge to the higher one, direction 1 the reverse.
enum class VarKind { VertexSelect, EdgeUse, Flow, Other };

enum class RowSense { LessEqual, Equal, GreaterEqual };

struct LpVariable {
  std::string name;
  VarKind kind = VarKind::Other;
  double objective = 0.0;
  // Structural tags, -1 when unused.  VertexSelect: tag1 = vertex.
  // EdgeUse: tag1 = edge id.  Flow: tag1 = commodity vertex, tag2 = edge
  // id, tag3 = direction.
  int tag1 = -1;
  int tag2 = -1;
  int tag3 = -1;
};

struct LpConstraint {
  std::string name;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
  std::vector<std::pair<int, double>> terms;  // sorted by variable index
};

// Minimization model over variables with lower bound 0 and no upper bound.
// Coefficients must be finite; constraints may only reference declared
// variables.  Construction is incremental and the model is plain data, so
// distinct models can be built and solved concurrently.
class LpModel {
 public:
  // Declares a variable and returns its index.  Names must be unique and
  // nonempty; they double as the identifiers in the LP text rendering.
  int add_variable(std::string name, VarKind kind, double objective,
                   int tag1 = -1, int tag2 = -1, int tag3 = -1);

  // Adds a row sum(coef * var) <sense> rhs and returns its index.  Terms
  // with the same variable are merged; zero coefficients are dropped.
  int add_constraint(std::string name, RowSense sense,
                     std::vector<std::pair<int, double>> terms, double rhs);

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  int nonzeros() const { return nonzeros_; }
  const LpVariable& variable(int j) const { return vars_[j]; }
  const LpConstraint& constraint(int i) const { return rows_[i]; }
  std::optional<int> find_variable(const std::string& name) const;

  double objective_value(const std::vector<double>& x) const;

  // Largest violation at x over all rows and lower bounds; 0 when feasible.
  double max_violation(const std::vector<double>& x) const;

  // Renders the model in the conventional human-readable LP exchange text
  // (Minimize / Subject To / Bounds / End) for external cross-checking.
  std::string to_lp_text() const;

 private:
  std::vector<LpVariable> vars_;
  std::vector<LpConstraint> rows_;
  std::vector<std::pair<std::string, int>> name_index_;  // sorted by name
  int nonzeros_ = 0;
};

// --- solver ------------------------------------------------------------------

enum class LpStatus { Optimal, Infeasible, Unbounded, Stalled };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Stalled;
  std::vector<double> values;  // per variable; empty unless optimal
  double objective = 0.0;      // recomputed from `values`
  // Per-constraint duals (optimal only).  Convention for a minimization:
  // >= rows have nonnegative duals, <= rows nonpositive, = rows free.
  std::vector<double> duals;
  double max_residual = 0.0;  // largest constraint/bound violation at `values`
  double duality_gap = 0.0;   // |objective - dual objective|
  // True when the final basis was re-verified in exact rational arithmetic
  // (models under 5000 nonzeros; skipped when coefficient growth explodes).
  bool basis_verified_exactly = false;
  int iterations = 0;
};

// Two-phase primal simplex on the dense tableau, deterministic throughout:
// Dantzig pricing with lowest-index tie-breaks, switching to Bland's rule
// when the objective stops improving, so cycling cannot persist.
// Feasibility is certified to 1e-9, optimality (reduced costs) to 1e-7.
// Numerical trouble surfaces as LpStatus::Stalled, never as a silently
// wrong answer; infeasible and unbounded models are detected and labeled.
LpSolution solve_lp(const LpModel& model);

// --- relaxations for the connected-domination problem -------------------------

// Flow relaxation rooted at `root`: minimize sum w(v)x(v) + sum l(e)y(e)
// subject to closed-neighborhood domination of every terminal, one flow
// commodity per vertex v != root shipping x(v) units from the root to v on
// the bidirected edges, and per-commodity edge capacities y(e).  The root
// commodity is omitted: the root is only assumed to be spanned, and its
// flow requirement is trivially satisfiable.  Any 0/1 point of this model
// is a connected-domination solution whose tree contains the root.
LpModel build_cds_flow_lp(const CdsInstance& inst, int root);

// Dense view of a point of build_cds_flow_lp, addressed by vertex, edge
// and (commodity, edge, direction).  flow[root] stays all zero.
struct CdsFlowPoint {
  std::vector<double> x;                                   // per vertex
  std::vector<double> y;                                   // per edge
  std::vector<std::vector<std::array<double, 2>>> flow;    // [vertex][edge][dir]
};

// Converts between the model's variable order and the dense view.
CdsFlowPoint unpack_cds_point(const LpModel& model, const Graph& g,
                              const std::vector<double>& values);
std::vector<double> pack_cds_point(const LpModel& model,
                                   const CdsFlowPoint& point);

// Fractional domination model restricted to the heavy partition classes:
// classes whose x* mass is at least 1/theta.  Returns the sorted heavy
// class indices and the model min sum w(v)x(v) over v in the heavy union,
// subject to sum over N[t] of x >= 1 for every terminal.  A terminal whose
// closed neighborhood misses the heavy union would contradict the heavy
// class guarantee, so it raises InternalError.
struct SetCoverLp {
  std::vector<int> heavy;
  LpModel model;
};
SetCoverLp build_setcover_lp(const CdsInstance& inst,
                             const SquarePartition& partition,
                             const std::vector<double>& xstar,
                             double theta = 14.0);

// Steiner flow relaxation: minimize sum l(e)y(e) subject to one unit of
// flow from the root to every representative, with per-commodity edge
// capacities y(e).  Representatives must be distinct; a representative
// equal to the root contributes no commodity.
LpModel build_steiner_flow_lp(const Graph& g, const std::vector<Fixed>& lengths,
                              int root,
                              const std::vector<int>& representatives);

// Point of build_steiner_flow_lp; flow is indexed by position in the
// representative list passed alongside.
struct SteinerFlowPoint {
  std::vector<double> y;                                 // per edge
  std::vector<std::vector<std::array<double, 2>>> flow;  // [rep idx][edge][dir]
};
std::vector<double> pack_steiner_point(const LpModel& model,
                                       const std::vector<int>& representatives,
                                       const SteinerFlowPoint& point);

// Reroutes an optimal point of the rooted flow relaxation into a feasible
// point of the Steiner flow relaxation on the same graph.  Every class
// member's commodity is extended by the clique edge into the class
// representative (the x* mass of the root itself is injected directly),
// the merged commodity is normalized to unit value, and capacities are set
// to max(theta * augmented y*, per-commodity usage).  Opposite arc flows
// cancel first.  A missing clique edge or an empty heavy class raises
// InternalError.
SteinerFlowPoint reroute_flow(const Graph& g, const CdsFlowPoint& star,
                              const SquarePartition& partition,
                              const std::vector<int>& representatives,
                              int root, double theta);

}  // namespace vcst
