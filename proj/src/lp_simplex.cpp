#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "vcst/fixed.hpp"
#include "vcst/lp.hpp"

namespace vcst {

namespace {

constexpr double kFeasTol = 1e-9;   // feasibility certification
constexpr double kOptTol = 1e-7;    // reduced-cost optimality threshold
constexpr double kPivotTol = 1e-9;  // smallest acceptable pivot magnitude

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// The model rewritten as  A x {<=,=} b  with b >= 0, one slack or surplus
// column per inequality row and one artificial column per row that lacks a
// nonnegative slack.  Columns: structurals, then logicals in row order.
struct StandardForm {
  int m = 0;        // rows
  int n = 0;        // structural columns
  int total = 0;    // all columns
  std::vector<std::vector<double>> a;  // m x total
  std::vector<double> b;               // m, nonnegative
  std::vector<double> cost;            // total, phase-2 costs
  std::vector<char> artificial;        // per column
  std::vector<int> logical_col;        // per row: slack/surplus column or -1
  std::vector<int> artificial_col;     // per row: artificial column or -1
  std::vector<char> flipped;           // per row: sign-flipped vs the model
};

StandardForm standardize(const LpModel& model) {
  StandardForm sf;
  sf.m = model.num_constraints();
  sf.n = model.num_variables();
  // First pass decides row orientation and the exact column count.
  std::vector<RowSense> sense(sf.m);
  std::vector<char> flip(sf.m);
  for (int i = 0; i < sf.m; ++i) {
    const LpConstraint& row = model.constraint(i);
    bool f = row.rhs < 0.0;
    RowSense s = row.sense;
    if (f && s == RowSense::LessEqual) s = RowSense::GreaterEqual;
    else if (f && s == RowSense::GreaterEqual) s = RowSense::LessEqual;
    sense[i] = s;
    flip[i] = f;
  }
  int extra = 0;
  for (int i = 0; i < sf.m; ++i) {
    if (sense[i] == RowSense::LessEqual) extra += 1;        // slack
    else if (sense[i] == RowSense::GreaterEqual) extra += 2;  // surplus + art
    else extra += 1;                                          // artificial
  }
  sf.total = sf.n + extra;
  sf.a.assign(sf.m, std::vector<double>(sf.total, 0.0));
  sf.b.assign(sf.m, 0.0);
  sf.cost.assign(sf.total, 0.0);
  sf.artificial.assign(sf.total, 0);
  sf.logical_col.assign(sf.m, -1);
  sf.artificial_col.assign(sf.m, -1);
  sf.flipped.assign(sf.m, 0);
  for (int j = 0; j < sf.n; ++j) sf.cost[j] = model.variable(j).objective;
  int col = sf.n;
  for (int i = 0; i < sf.m; ++i) {
    const LpConstraint& row = model.constraint(i);
    double sgn = flip[i] ? -1.0 : 1.0;
    for (auto& [j, c] : row.terms) sf.a[i][j] = sgn * c;
    sf.b[i] = sgn * row.rhs;
    sf.flipped[i] = flip[i];
    switch (sense[i]) {
      case RowSense::LessEqual:
        sf.a[i][col] = 1.0;
        sf.logical_col[i] = col++;
        break;
      case RowSense::GreaterEqual:
        sf.a[i][col] = -1.0;
        sf.logical_col[i] = col++;
        sf.a[i][col] = 1.0;
        sf.artificial[col] = 1;
        sf.artificial_col[i] = col++;
        break;
      case RowSense::Equal:
        sf.a[i][col] = 1.0;
        sf.artificial[col] = 1;
        sf.artificial_col[i] = col++;
        break;
    }
  }
  return sf;
}

// Dense simplex tableau worked in place; basis[i] is the column basic in
// row i.  The tableau holds B^-1 A in `a` and B^-1 b in `b`.
struct Tableau {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<int> basis;

  void pivot(int r, int c) {
    const int m = static_cast<int>(a.size());
    const int total = static_cast<int>(a[r].size());
    double p = a[r][c];
    for (int j = 0; j < total; ++j) a[r][j] /= p;
    b[r] /= p;
    a[r][c] = 1.0;  // cut round-off drift on the pivot column
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = a[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j < total; ++j) a[i][j] -= f * a[r][j];
      a[i][c] = 0.0;
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }
};

enum class PhaseOutcome { Optimal, Unbounded, IterationCap };

// Runs the simplex loop for the given cost vector.  `allowed[c]` marks the
// columns that may enter the basis.  Deterministic: Dantzig pricing with
// lowest-index tie-breaks until the objective stops improving, then
// Bland's rule (which cannot cycle).
PhaseOutcome run_phase(Tableau& t, const std::vector<double>& cost,
                       const std::vector<char>& allowed, int iteration_cap,
                       int& iterations) {
  const int m = static_cast<int>(t.b.size());
  const int total = static_cast<int>(cost.size());
  std::vector<double> cb(m);
  bool bland = false;
  int no_progress = 0;
  const int bland_trigger = 5 * (m + 16);
  double last_obj = std::numeric_limits<double>::infinity();
  while (iterations < iteration_cap) {
    for (int i = 0; i < m; ++i) cb[i] = cost[t.basis[i]];
    // Pricing: reduced cost d_j = c_j - cb . column_j.
    int enter = -1;
    double best = -kOptTol;
    for (int j = 0; j < total; ++j) {
      if (!allowed[j]) continue;
      double d = cost[j];
      for (int i = 0; i < m; ++i) d -= cb[i] * t.a[i][j];
      if (d < best - 1e-15 || (bland && d < -kOptTol)) {
        enter = j;
        best = d;
        if (bland) break;  // lowest index with negative reduced cost
      }
    }
    if (enter < 0) return PhaseOutcome::Optimal;
    // Ratio test; ties prefer the lowest basic variable index (Bland-safe).
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      double aic = t.a[i][enter];
      if (aic <= kPivotTol) continue;
      double ratio = t.b[i] / aic;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return PhaseOutcome::Unbounded;
    t.pivot(leave, enter);
    ++iterations;
    double obj = 0.0;
    for (int i = 0; i < m; ++i) obj += cost[t.basis[i]] * t.b[i];
    if (obj < last_obj - 1e-12 * (1.0 + std::abs(last_obj))) {
      no_progress = 0;
    } else if (++no_progress >= bland_trigger) {
      bland = true;
    }
    last_obj = obj;
  }
  return PhaseOutcome::IterationCap;
}

Rat rat_from_double(double v) { return Rat(v); }

// Sparse exact Gaussian elimination solving M z = rhs for square M given
// by columns.  Returns false when M is singular or entries outgrow the bit
// guard.  Pivot choice: fewest active nonzeros in the column, then lowest
// column; within the column the lexically first active row.
bool exact_solve(const std::vector<std::vector<std::pair<int, Rat>>>& cols,
                 std::vector<Rat> rhs, std::vector<Rat>& out) {
  const int m = static_cast<int>(cols.size());
  std::vector<std::map<int, Rat>> row(m);  // row -> (col -> nonzero value)
  for (int c = 0; c < m; ++c)
    for (auto& [r, v] : cols[c])
      if (v != 0) row[r][c] = v;
  std::vector<int> row_of_col(m, -1);
  std::vector<int> pivot_order;
  std::vector<char> row_done(m, 0);
  auto too_big = [](const Rat& q) {
    return boost::multiprecision::msb(boost::multiprecision::abs(
               boost::multiprecision::numerator(q)) + 1) > 8192 ||
           boost::multiprecision::msb(boost::multiprecision::denominator(q)) >
               8192;
  };
  for (int step = 0; step < m; ++step) {
    // Markowitz-style pivot choice: the column with the fewest active
    // nonzeros (ties toward the lowest index) keeps fill-in small on the
    // near-network matrices these bases come from.
    std::vector<int> cnt(m, 0);
    for (int r = 0; r < m; ++r) {
      if (row_done[r]) continue;
      for (auto& [c, v] : row[r])
        if (row_of_col[c] < 0) ++cnt[c];
    }
    int pc = -1;
    for (int c = 0; c < m; ++c)
      if (row_of_col[c] < 0 && cnt[c] > 0 && (pc < 0 || cnt[c] < cnt[pc]))
        pc = c;
    if (pc < 0) return false;  // singular
    int pr = -1;
    for (int r = 0; r < m && pr < 0; ++r) {
      if (row_done[r]) continue;
      if (row[r].count(pc)) pr = r;
    }
    const Rat pv = row[pr][pc];
    for (int r = 0; r < m; ++r) {
      if (r == pr || row_done[r]) continue;
      auto hit = row[r].find(pc);
      if (hit == row[r].end()) continue;
      Rat f = hit->second / pv;
      for (const auto& [c, v] : row[pr]) {
        if (row_of_col[c] >= 0 && c != pc) continue;
        auto it = row[r].find(c);
        Rat nv = (it == row[r].end() ? Rat(0) : it->second) - f * v;
        if (too_big(nv)) return false;
        if (nv == 0) {
          if (it != row[r].end()) row[r].erase(it);
        } else if (it != row[r].end()) {
          it->second = std::move(nv);
        } else {
          row[r].emplace(c, std::move(nv));
        }
      }
      rhs[r] -= f * rhs[pr];
      if (too_big(rhs[r])) return false;
    }
    row_of_col[pc] = pr;
    row_done[pr] = 1;
    pivot_order.push_back(pc);
  }
  // After elimination each pivot row still references its own column plus
  // columns pivoted later, so substitution in reverse pivot order resolves
  // every column in one sweep.
  out.assign(m, Rat(0));
  for (int k = m - 1; k >= 0; --k) {
    int c = pivot_order[k];
    int r = row_of_col[c];
    Rat acc = rhs[r];
    for (const auto& [cc, v] : row[r])
      if (cc != c) acc -= v * out[cc];
    out[c] = acc / row[r][c];
  }
  return true;
}

// Exact rational re-verification of the final basis: recomputes the basic
// solution and the row prices from scratch and checks primal
// nonnegativity (to the 1e-9 feasibility tolerance, exactly) and every
// non-artificial reduced cost (to 10x the float optimality tolerance, so
// honest float round-off near the threshold is not misread as an error).
// On confirmation the float point and duals are replaced by the exact
// ones rounded to double.  Returns 1 on confirmation, 0 on bail-out
// (exactly singular basis or coefficient blow-up), -1 on refutation.
int verify_basis_exactly(const StandardForm& sf, const std::vector<int>& basis,
                         std::vector<Rat>& xb_out, std::vector<Rat>& w_out) {
  const int m = sf.m;
  std::vector<std::vector<std::pair<int, Rat>>> bcols(m);
  for (int i = 0; i < m; ++i) {
    int col = basis[i];
    for (int r = 0; r < m; ++r)
      if (sf.a[r][col] != 0.0)
        bcols[i].push_back({r, rat_from_double(sf.a[r][col])});
  }
  std::vector<Rat> rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = rat_from_double(sf.b[i]);
  if (!exact_solve(bcols, rhs, xb_out)) return 0;
  const Rat feas_tol = rat_from_double(kFeasTol);
  for (int i = 0; i < m; ++i)
    if (xb_out[i] < -feas_tol) return -1;
  // Artificials must sit at zero in a claimed-feasible basis.
  for (int i = 0; i < m; ++i)
    if (sf.artificial[basis[i]] && xb_out[i] > feas_tol) return -1;
  // Row prices: solve B^T w = c_B, then check reduced costs.
  std::vector<std::vector<std::pair<int, Rat>>> tcols(m);
  for (int i = 0; i < m; ++i)
    for (auto& [r, v] : bcols[i]) tcols[r].push_back({i, v});
  std::vector<Rat> cb(m);
  for (int i = 0; i < m; ++i) cb[i] = rat_from_double(sf.cost[basis[i]]);
  if (!exact_solve(tcols, cb, w_out)) return 0;
  const Rat opt_tol = rat_from_double(10 * kOptTol);
  for (int j = 0; j < sf.total; ++j) {
    if (sf.artificial[j]) continue;
    Rat d = rat_from_double(sf.cost[j]);
    for (int i = 0; i < m; ++i)
      if (sf.a[i][j] != 0.0) d -= w_out[i] * rat_from_double(sf.a[i][j]);
    if (d < -opt_tol) return -1;
  }
  return 1;
}

}  // namespace

LpSolution solve_lp(const LpModel& model) {
  LpSolution sol;
  StandardForm sf = standardize(model);
  const int m = sf.m;
  const int total = sf.total;

  Tableau t;
  t.a = sf.a;
  t.b = sf.b;
  t.basis.assign(m, -1);
  for (int i = 0; i < m; ++i)
    t.basis[i] = sf.artificial_col[i] >= 0 ? sf.artificial_col[i]
                                           : sf.logical_col[i];

  const int iteration_cap = 10 * (m + total) + 1000;
  int iterations = 0;

  // Phase 1: drive the artificial variables to zero.
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i)
    if (sf.artificial_col[i] >= 0) need_phase1 = true;
  if (need_phase1) {
    std::vector<double> cost1(total, 0.0);
    for (int j = 0; j < total; ++j)
      if (sf.artificial[j]) cost1[j] = 1.0;
    std::vector<char> allowed(total, 1);
    PhaseOutcome out = run_phase(t, cost1, allowed, iteration_cap, iterations);
    if (out != PhaseOutcome::Optimal) {
      // The artificial objective is bounded below by zero, so anything but
      // optimality here is a numerical breakdown, not a model property.
      sol.status = LpStatus::Stalled;
      sol.iterations = iterations;
      return sol;
    }
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (sf.artificial[t.basis[i]]) infeas += t.b[i];
    if (infeas > kOptTol) {
      sol.status = LpStatus::Infeasible;
      sol.iterations = iterations;
      return sol;
    }
    // Pivot leftover zero-valued artificials out where possible.
    for (int i = 0; i < m; ++i) {
      if (!sf.artificial[t.basis[i]]) continue;
      int repl = -1;
      for (int j = 0; j < total && repl < 0; ++j)
        if (!sf.artificial[j] && std::abs(t.a[i][j]) > kPivotTol) repl = j;
      if (repl >= 0) t.pivot(i, repl);
      // An all-zero row is redundant; its artificial stays basic at zero
      // and is simply never allowed to grow again.
    }
  }

  // Phase 2: the real objective; artificial columns may not re-enter.
  {
    std::vector<char> allowed(total, 1);
    for (int j = 0; j < total; ++j)
      if (sf.artificial[j]) allowed[j] = 0;
    PhaseOutcome out = run_phase(t, sf.cost, allowed, iteration_cap, iterations);
    sol.iterations = iterations;
    if (out == PhaseOutcome::IterationCap) {
      sol.status = LpStatus::Stalled;
      return sol;
    }
    if (out == PhaseOutcome::Unbounded) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }
  }

  // Extract the point, snap measurement noise, and certify.
  std::vector<double> x(model.num_variables(), 0.0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < sf.n) x[t.basis[i]] = t.b[i];
  for (double& v : x)
    if (v < 0.0 && v > -1e-11) v = 0.0;
  sol.values = x;
  sol.objective = model.objective_value(x);
  sol.max_residual = model.max_violation(x);

  // Duals from the reduced costs of the logical columns.
  std::vector<double> cb(m);
  for (int i = 0; i < m; ++i) cb[i] = sf.cost[t.basis[i]];
  sol.duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    int lc = sf.logical_col[i] >= 0 ? sf.logical_col[i] : sf.artificial_col[i];
    double d = sf.cost[lc];
    for (int r = 0; r < m; ++r) d -= cb[r] * t.a[r][lc];
    double coef = sf.a[i][lc];  // +1 slack/artificial, -1 surplus
    double y = coef > 0 ? -d : d;
    sol.duals[i] = sf.flipped[i] ? -y : y;
  }
  double dual_obj = 0.0;
  for (int i = 0; i < m; ++i)
    dual_obj += sol.duals[i] * model.constraint(i).rhs;
  sol.duality_gap = std::abs(sol.objective - dual_obj);

  if (sol.max_residual > kFeasTol) {
    sol.status = LpStatus::Stalled;
    return sol;
  }
  double tableau_obj = 0.0;
  for (int i = 0; i < m; ++i) tableau_obj += cb[i] * t.b[i];
  if (std::abs(tableau_obj - sol.objective) >
      1e-6 * (1.0 + std::abs(sol.objective))) {
    sol.status = LpStatus::Stalled;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  if (model.nonzeros() < 5000) {
    std::vector<Rat> xb, w;
    int verdict = verify_basis_exactly(sf, t.basis, xb, w);
    if (verdict < 0) {
      sol.status = LpStatus::Stalled;
      return sol;
    }
    if (verdict > 0) {
      sol.basis_verified_exactly = true;
      // Adopt the exact basic point and prices, rounded once to double.
      std::fill(sol.values.begin(), sol.values.end(), 0.0);
      for (int i = 0; i < m; ++i)
        if (t.basis[i] < sf.n)
          sol.values[t.basis[i]] = static_cast<double>(xb[i]);
      for (double& v : sol.values)
        if (v < 0.0) v = 0.0;  // within kFeasTol by the exact check
      sol.objective = model.objective_value(sol.values);
      sol.max_residual = model.max_violation(sol.values);
      for (int i = 0; i < m; ++i) {
        double y = static_cast<double>(w[i]);
        sol.duals[i] = sf.flipped[i] ? -y : y;
      }
      dual_obj = 0.0;
      for (int i = 0; i < m; ++i)
        dual_obj += sol.duals[i] * model.constraint(i).rhs;
      sol.duality_gap = std::abs(sol.objective - dual_obj);
    }
  }
  return sol;
}

}  // namespace vcst
