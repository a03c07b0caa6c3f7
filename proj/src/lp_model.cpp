#include "vcst/lp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

#include "vcst/fixed.hpp"

namespace vcst {

namespace {

bool lp_name_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

// Shortest decimal that round-trips; plenty for an exchange format.
std::string render(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back;
  std::sscanf(buf, "%lf", &back);
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

}  // namespace

int LpModel::add_variable(std::string name, VarKind kind, double objective,
                          int tag1, int tag2, int tag3) {
  if (!lp_name_ok(name))
    throw InvalidInstanceError("bad variable name: '" + name + "'");
  if (!std::isfinite(objective))
    throw InvalidInstanceError("objective coefficient must be finite");
  auto pos = std::lower_bound(
      name_index_.begin(), name_index_.end(), name,
      [](const auto& a, const std::string& b) { return a.first < b; });
  if (pos != name_index_.end() && pos->first == name)
    throw InvalidInstanceError("duplicate variable name: '" + name + "'");
  int j = static_cast<int>(vars_.size());
  name_index_.insert(pos, {name, j});
  vars_.push_back({std::move(name), kind, objective, tag1, tag2, tag3});
  return j;
}

int LpModel::add_constraint(std::string name, RowSense sense,
                            std::vector<std::pair<int, double>> terms,
                            double rhs) {
  if (!std::isfinite(rhs))
    throw InvalidInstanceError("constraint rhs must be finite");
  std::map<int, double> merged;
  for (auto& [j, c] : terms) {
    if (j < 0 || j >= num_variables())
      throw InvalidInstanceError("constraint references undeclared variable");
    if (!std::isfinite(c))
      throw InvalidInstanceError("constraint coefficient must be finite");
    merged[j] += c;
  }
  LpConstraint row;
  row.name = std::move(name);
  row.sense = sense;
  row.rhs = rhs;
  for (auto& [j, c] : merged)
    if (c != 0.0) row.terms.push_back({j, c});
  nonzeros_ += static_cast<int>(row.terms.size());
  rows_.push_back(std::move(row));
  return static_cast<int>(rows_.size()) - 1;
}

std::optional<int> LpModel::find_variable(const std::string& name) const {
  auto pos = std::lower_bound(
      name_index_.begin(), name_index_.end(), name,
      [](const auto& a, const std::string& b) { return a.first < b; });
  if (pos == name_index_.end() || pos->first != name) return std::nullopt;
  return pos->second;
}

double LpModel::objective_value(const std::vector<double>& x) const {
  double v = 0.0;
  for (int j = 0; j < num_variables(); ++j) v += vars_[j].objective * x[j];
  return v;
}

double LpModel::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j)
    worst = std::max(worst, -x[j]);
  for (const LpConstraint& row : rows_) {
    double lhs = 0.0;
    for (auto& [j, c] : row.terms) lhs += c * x[j];
    double over = lhs - row.rhs;  // positive when lhs exceeds rhs
    switch (row.sense) {
      case RowSense::LessEqual:
        worst = std::max(worst, over);
        break;
      case RowSense::GreaterEqual:
        worst = std::max(worst, -over);
        break;
      case RowSense::Equal:
        worst = std::max(worst, std::abs(over));
        break;
    }
  }
  return worst;
}

std::string LpModel::to_lp_text() const {
  std::string out = "Minimize\n obj:";
  bool first = true;
  for (const LpVariable& v : vars_) {
    if (v.objective == 0.0) continue;
    double mag = std::abs(v.objective);
    out += (v.objective < 0 ? " - " : first ? " " : " + ");
    out += render(mag) + " " + v.name;
    first = false;
  }
  if (first) out += " 0 " + (vars_.empty() ? std::string("zero") : vars_[0].name);
  out += "\nSubject To\n";
  for (const LpConstraint& row : rows_) {
    out += " " + row.name + ":";
    bool lead = true;
    for (auto& [j, c] : row.terms) {
      double mag = std::abs(c);
      out += (c < 0 ? " - " : lead ? " " : " + ");
      out += render(mag) + " " + vars_[j].name;
      lead = false;
    }
    if (lead) out += " 0 " + (vars_.empty() ? std::string("zero") : vars_[0].name);
    switch (row.sense) {
      case RowSense::LessEqual: out += " <= "; break;
      case RowSense::Equal: out += " = "; break;
      case RowSense::GreaterEqual: out += " >= "; break;
    }
    out += render(row.rhs) + "\n";
  }
  out += "Bounds\n";
  for (const LpVariable& v : vars_) out += " 0 <= " + v.name + "\n";
  out += "End\n";
  return out;
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Stalled: return "stalled";
  }
  return "?";
}

}  // namespace vcst
