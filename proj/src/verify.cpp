#include "vcst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "vcst/cds_approx.hpp"
#include "vcst/exact.hpp"
#include "vcst/fixed.hpp"
#include "vcst/generators.hpp"
#include "vcst/geometry.hpp"
#include "vcst/graph.hpp"
#include "vcst/io.hpp"
#include "vcst/lp.hpp"
#include "vcst/nws_pd.hpp"
#include "vcst/problems.hpp"
#include "vcst/reductions.hpp"
#include "vcst/rng.hpp"

namespace vcst {
namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// --- shared corpus -------------------------------------------------------------
//
// One fixed battery of 100 random connected unit-disk instances (6..10
// vertices, 2..4 terminals), each solved exactly and run through the
// all-roots rounding pipeline once.  Several checks read different facets
// of the same runs, so the battery is built lazily and cached.

struct RoundingCorpus {
  std::vector<VcstInstance> vcst;
  std::vector<CdsInstance> cds;
  std::vector<CdsSolution> exact;
  std::vector<CdsSolution> rounded;
  std::vector<RoundingReport> reports;
};

RoundingCorpus build_rounding_corpus() {
  RoundingCorpus c;
  Rng rng(424242);
  for (int i = 0; i < 100; ++i) {
    UdgGenParams p;
    p.n = 6 + static_cast<int>(rng.below(5));
    p.terminals = 2 + static_cast<int>(rng.below(3));
    VcstInstance vi = as_vcst(generate_random_udg(p, 50'000 + i));
    CdsInstance ci = reduce_vcst_to_cds(vi);
    c.exact.push_back(solve_cds_exact(ci));
    auto [sol, report] = solve_cds_all_roots(ci, SetCoverBackend::Exact);
    c.rounded.push_back(std::move(sol));
    c.reports.push_back(std::move(report));
    c.vcst.push_back(std::move(vi));
    c.cds.push_back(std::move(ci));
  }
  return c;
}

const RoundingCorpus& rounding_corpus() {
  static const RoundingCorpus corpus = build_rounding_corpus();
  return corpus;
}

// --- oracle checks -------------------------------------------------------------

// Two independent exact solvers (cover-candidate enumeration vs. spanning
// tree sweep) must return the same objective on every small instance.
CheckResult check_exact_solvers_agree() {
  CheckResult r{"independent exact solvers agree", false, ""};
  Rng rng(11111);
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    bool uniform = i < rounds / 2;
    UdgGenParams p;
    p.n = 4 + static_cast<int>(rng.below(5));
    p.terminals = 2 + static_cast<int>(rng.below(p.n - 1));
    p.weight_lo = uniform ? 2'000'000 : 1'000'000;
    p.weight_hi = uniform ? 2'000'000 : 3'000'000;
    VcstInstance inst = as_vcst(generate_random_udg(p, 10'000 + i));
    VcstSolution a = solve_vcst_exact(inst);
    Verdict v = validate_vcst_solution(inst, a);
    if (!v.ok) {
      r.detail = fmt("instance %d: invalid exact solution: %s", i,
                     v.violation.c_str());
      return r;
    }
    Fixed b = solve_vcst_exact_crosscheck(inst);
    if (a.objective != b) {
      r.detail = fmt("instance %d: objectives %s vs %s", i,
                     a.objective.to_string().c_str(), b.to_string().c_str());
      return r;
    }
  }
  r.pass = true;
  r.detail = fmt("%d instances (half uniform, half random weights), "
                 "objectives identical on all",
                 rounds);
  return r;
}

// --- geometry checks -----------------------------------------------------------

// Pinned constants of the square partition argument: the two packing
// bounds used by the analysis both equal 12, and no unit-disk neighborhood
// ever touches more than 14 squares (14 itself must be reached, so the
// constant is tight on this battery).
CheckResult check_partition_constants() {
  CheckResult r{"partition and packing constants", false, ""};
  int b1 = packing_bound(1.0 / 1.41);
  int b2 = packing_bound(1.41 / 2.0);
  if (b1 != 12 || b2 != 12) {
    r.detail = fmt("packing bounds %d and %d, want 12 and 12", b1, b2);
    return r;
  }
  Rng rng(23);
  int achieved = 0;
  int worst = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 40 + static_cast<int>(rng.below(200));
    std::int64_t box = 1'500'000 + rng.range(0, 6'000'000);
    std::vector<Point> pts(n);
    for (auto& q : pts) q = {rng.range(0, box), rng.range(0, box)};
    Graph g = build_unit_disk_graph(pts, std::vector<Fixed>(n, Fixed()));
    SquarePartition part = square_partition(g);
    int touched = max_neighborhood_classes(g, part);
    worst = std::max(worst, touched);
    if (touched == 14) ++achieved;
  }
  r.pass = worst <= 14 && achieved > 0;
  r.detail = fmt("packing bounds 12/12; 1000 unit-disk sweeps: max classes "
                 "per neighborhood %d (cap 14), cap reached %d times",
                 worst, achieved);
  return r;
}

// Any packing_bound(alpha)+1 points whose distances from a common center
// lie in [1, 1/alpha) must contain two points closer to each other than
// half the larger center distance.
CheckResult check_close_pair() {
  CheckResult r{"dense clusters force a close pair", false, ""};
  Rng rng(31);
  const double alphas[] = {0.55, 0.6, 0.709, 0.75};
  int total = 0;
  int misses = 0;
  for (double alpha : alphas) {
    int count = packing_bound(alpha) + 1;
    for (int iter = 0; iter < 500; ++iter) {
      std::vector<double> rad(count), phi(count);
      for (int i = 0; i < count; ++i) {
        rad[i] = 1.0 + rng.unit() * (0.999999 / alpha - 1.0);
        phi[i] = rng.unit() * 2.0 * M_PI;
      }
      bool found = false;
      for (int j = 0; j < count && !found; ++j) {
        for (int k = j + 1; k < count && !found; ++k) {
          double dx = rad[j] * std::cos(phi[j]) - rad[k] * std::cos(phi[k]);
          double dy = rad[j] * std::sin(phi[j]) - rad[k] * std::sin(phi[k]);
          found = std::hypot(dx, dy) < std::max(rad[j], rad[k]) / 2.0;
        }
      }
      ++total;
      if (!found) ++misses;
    }
  }
  r.pass = misses == 0;
  r.detail = fmt("%d random configurations over four density ratios; "
                 "close pair missing in %d",
                 total, misses);
  return r;
}

// --- relaxation checks -----------------------------------------------------------

// The rooted flow relaxation, rooted inside an optimal structure, never
// exceeds the exact connected-domination optimum.
CheckResult check_relaxation_lower_bound() {
  CheckResult r{"flow relaxation lower-bounds the connected-domination optimum",
                false, ""};
  const RoundingCorpus& c = rounding_corpus();
  double worst = -1e300;
  for (std::size_t i = 0; i < c.cds.size(); ++i) {
    int root = c.exact[i].domset.front();
    LpSolution s = solve_lp(build_cds_flow_lp(c.cds[i], root));
    if (s.status != LpStatus::Optimal) {
      r.detail = fmt("instance %zu: relaxation status %s", i,
                     to_string(s.status));
      return r;
    }
    double excess = s.objective - c.exact[i].objective.to_double();
    worst = std::max(worst, excess);
    if (excess > 1e-7) {
      r.detail = fmt("instance %zu: relaxation exceeds the optimum by %.3e",
                     i, excess);
      return r;
    }
  }
  r.pass = true;
  r.detail = fmt("%zu instances rooted inside an optimal structure; max "
                 "relaxation minus optimum %.3e (tolerance 1e-7)",
                 c.cds.size(), worst);
  return r;
}

// Scaling the relaxation point by 14 yields a fractional cover of every
// terminal inside the heavy classes (certificate recomputed per run).
CheckResult check_cover_scaling() {
  CheckResult r{"scaled relaxation point covers fractionally", false, ""};
  const RoundingCorpus& c = rounding_corpus();
  int ok = 0;
  for (const RoundingReport& rep : c.reports) ok += rep.cover_scale_ok ? 1 : 0;
  r.pass = ok == static_cast<int>(c.reports.size());
  r.detail = fmt("%d/%zu runs certified the scaled point feasible for the "
                 "restricted domination relaxation (residual tolerance 1e-9)",
                 ok, c.reports.size());
  return r;
}

// The rerouted flow point stays feasible for the Steiner relaxation and
// its cost stays within the 14x budget of the original relaxation value.
CheckResult check_reroute_budget() {
  CheckResult r{"rerouted flow stays feasible within the scaled budget", false,
                ""};
  const RoundingCorpus& c = rounding_corpus();
  int ok = 0;
  for (const RoundingReport& rep : c.reports) ok += rep.reroute_ok ? 1 : 0;
  r.pass = ok == static_cast<int>(c.reports.size());
  r.detail = fmt("%d/%zu reroutes feasible with cost within 14x the "
                 "relaxation value (tolerance 1e-6)",
                 ok, c.reports.size());
  return r;
}

// The metric-completion Steiner heuristic stays within twice the exact
// tree optimum and twice the Steiner flow relaxation optimum.
CheckResult check_tree_factor() {
  CheckResult r{"metric tree within twice both lower bounds", false, ""};
  const RoundingCorpus& c = rounding_corpus();
  Rng rng(777);
  double worst_exact = 0.0;
  double worst_lp = 0.0;
  for (std::size_t i = 0; i < c.cds.size(); ++i) {
    const Graph& g = c.cds[i].graph;
    int tcount = 2 + static_cast<int>(rng.below(std::min(g.n(), 8) - 1));
    std::vector<int> perm(g.n());
    for (int v = 0; v < g.n(); ++v) perm[v] = v;
    for (int j = 0; j < tcount; ++j)
      std::swap(perm[j], perm[j + rng.below(g.n() - j)]);
    std::vector<int> terms(perm.begin(), perm.begin() + tcount);
    std::sort(terms.begin(), terms.end());

    auto [opt_edges, opt_len] = solve_edge_steiner_exact(g, terms);
    (void)opt_edges;
    std::vector<int> tree = steiner_2approx_metric_mst(g, g.lengths(), terms);
    double len = length_sum(g, tree).to_double();
    double opt = opt_len.to_double();
    if (len > 2.0 * opt + 1e-9) {
      r.detail = fmt("instance %zu: tree %.6f vs exact %.6f", i, len, opt);
      return r;
    }
    std::vector<int> reps(terms.begin() + 1, terms.end());
    LpSolution s = solve_lp(build_steiner_flow_lp(g, g.lengths(), terms[0], reps));
    if (s.status != LpStatus::Optimal) {
      r.detail = fmt("instance %zu: relaxation status %s", i, to_string(s.status));
      return r;
    }
    if (len > 2.0 * s.objective + 1e-6) {
      r.detail = fmt("instance %zu: tree %.6f vs relaxation %.6f", i, len,
                     s.objective);
      return r;
    }
    worst_exact = std::max(worst_exact, len / opt);
    worst_lp = std::max(worst_lp, len / s.objective);
  }
  r.pass = true;
  r.detail = fmt("%zu trees; max length / exact optimum %.3f, max length / "
                 "relaxation optimum %.3f (caps 2)",
                 c.cds.size(), worst_exact, worst_lp);
  return r;
}

// Full rounding chain: every per-instance certificate holds and the output
// respects the certified factor 2 * (gamma + 1) * 14 over the relaxation,
// without ever undercutting the exact optimum.
CheckResult check_rounding_chain() {
  CheckResult r{"certified rounding chain holds end to end", false, ""};
  const RoundingCorpus& c = rounding_corpus();
  double max_ratio = 0.0;
  double max_cap_use = 0.0;
  for (std::size_t i = 0; i < c.reports.size(); ++i) {
    const RoundingReport& rep = c.reports[i];
    if (!rep.all_ok()) {
      r.detail = fmt("instance %zu: a per-run certificate failed: %s", i,
                     rep.to_json().c_str());
      return r;
    }
    double cap = 2.0 * (rep.gamma_cert + 1.0) * 14.0 * rep.lp1_objective;
    double obj = c.rounded[i].objective.to_double();
    if (obj > cap + 1e-6) {
      r.detail = fmt("instance %zu: output %.6f above its certified cap %.6f",
                     i, obj, cap);
      return r;
    }
    if (c.rounded[i].objective < c.exact[i].objective) {
      r.detail = fmt("instance %zu: output below the exact optimum", i);
      return r;
    }
    max_cap_use = std::max(max_cap_use, obj / cap);
    max_ratio = std::max(max_ratio, obj / c.exact[i].objective.to_double());
  }
  r.pass = true;
  r.detail = fmt("%zu runs certified; output used at most %.1f%% of its "
                 "per-instance cap; max output / optimum ratio %.3f",
                 c.reports.size(), 100.0 * max_cap_use, max_ratio);
  return r;
}

// --- reduction checks -------------------------------------------------------------

// Lifting a connected-domination solution to a tree-plus-cover solution is
// always feasible and never costs more.
CheckResult check_domination_lift() {
  CheckResult r{"domination solutions lift without cost increase", false, ""};
  const RoundingCorpus& c = rounding_corpus();
  Fixed max_drop = Fixed::from_int(0);
  for (std::size_t i = 0; i < c.vcst.size(); ++i) {
    VcstSolution lifted = lift_cds_to_vcst(c.vcst[i], c.rounded[i]);
    Verdict v = validate_vcst_solution(c.vcst[i], lifted);
    if (!v.ok) {
      r.detail = fmt("instance %zu: lifted solution invalid: %s", i,
                     v.violation.c_str());
      return r;
    }
    if (c.rounded[i].objective < lifted.objective) {
      r.detail = fmt("instance %zu: lift raised the objective from %s to %s",
                     i, c.rounded[i].objective.to_string().c_str(),
                     lifted.objective.to_string().c_str());
      return r;
    }
    Fixed drop = c.rounded[i].objective - lifted.objective;
    if (max_drop < drop) max_drop = drop;
  }
  r.pass = true;
  r.detail = fmt("%zu unit-disk pipelines; every lifted cover feasible, "
                 "largest cost saving %s",
                 c.vcst.size(), max_drop.to_string().c_str());
  return r;
}

// One activation round trip: encode a cover instance over at most three
// levels, reduce to the copy graph, solve that exactly, lift back, and
// compare with direct enumeration of all level assignments.
bool activation_roundtrip_once(const Graph& g, const std::vector<int>& terms,
                               std::string* why) {
  VcstInstance vi(g, terms);
  ActivationInstance act = encode_vcst_as_activation(vi);
  NwsReduction red = reduce_activation_to_nws(act);
  NwsSolution nws = solve_nws_exact(red.instance);
  ActivationLift lift = lift_nws_to_activation(act, red, nws.tree);
  ActivationSolution brute = solve_activation_exact(act);
  Verdict lv = validate_activation_solution(act, lift.solution);
  if (!lv.ok) {
    *why = "lifted assignment invalid: " + lv.violation;
    return false;
  }
  if (lift.solution.objective != nws.added_weight ||
      nws.added_weight != brute.objective) {
    *why = fmt("objectives differ: lifted %s, reduced %s, enumerated %s",
               lift.solution.objective.to_string().c_str(),
               nws.added_weight.to_string().c_str(),
               brute.objective.to_string().c_str());
    return false;
  }
  return true;
}

CheckResult check_activation_roundtrip() {
  CheckResult r{"activation round-trip is exact on small instances", false, ""};
  int cases = 0;
  std::string why;
  // Exhaustive sweep: every connected graph on 3 and 4 vertices, two weight
  // pools (at most two distinct nonzero values each), two terminal choices.
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    for (int mask = 1; mask < (1 << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1) edges.push_back(pairs[e]);
      for (int pool = 0; pool < 2; ++pool) {
        GraphData d;
        d.n = n;
        d.edges = edges;
        for (int v = 0; v < n; ++v) {
          int w = pool == 0 ? (v % 2 ? 2 : 1) : (v % 3 == 0 ? 0 : v % 3 == 1 ? 1 : 3);
          d.weights.push_back(Fixed::from_int(w));
        }
        Graph g(d);
        std::vector<char> all(n, 1);
        if (!is_connected_subset(g, all)) continue;
        std::vector<int> everyone(n);
        for (int v = 0; v < n; ++v) everyone[v] = v;
        for (const std::vector<int>& terms :
             {std::vector<int>{0, n - 1}, everyone}) {
          ++cases;
          if (!activation_roundtrip_once(g, terms, &why)) {
            r.detail = fmt("exhaustive case %d: %s", cases, why.c_str());
            return r;
          }
        }
      }
    }
  }
  // Random sweep: connected graphs on 5 and 6 vertices with small level sets.
  Rng rng(31337);
  for (int round = 0; round < 30; ++round) {
    int n = round < 15 ? 5 : 6;
    GraphData d;
    d.n = n;
    do {
      d.edges.clear();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.coin()) d.edges.push_back({u, v});
    } while (d.edges.empty() ||
             !is_connected_subset(Graph([&] {
                                    GraphData t = d;
                                    t.weights.assign(n, Fixed());
                                    return t;
                                  }()),
                                  std::vector<char>(n, 1)));
    d.weights.clear();
    for (int v = 0; v < n; ++v)
      d.weights.push_back(Fixed::from_int(round < 15 ? (rng.coin() ? 1 : 3) : 2));
    Graph g(d);
    int tcount = 2 + static_cast<int>(rng.below(n - 1));
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int j = 0; j < tcount; ++j)
      std::swap(perm[j], perm[j + rng.below(n - j)]);
    std::vector<int> terms(perm.begin(), perm.begin() + tcount);
    std::sort(terms.begin(), terms.end());
    ++cases;
    if (!activation_roundtrip_once(g, terms, &why)) {
      r.detail = fmt("random case %d: %s", cases, why.c_str());
      return r;
    }
  }
  r.pass = true;
  r.detail = fmt("%d instances (exhaustive 3- and 4-vertex graphs plus 30 "
                 "random ones); lifted, reduced and enumerated objectives "
                 "all equal",
                 cases);
  return r;
}

// Hardness gadgets preserve optima exactly: the cover optimum of a
// set-cover gadget equals the set-cover optimum, and the cover optimum of
// a subdivided grid equals the grid's edge-weighted Steiner optimum.
CheckResult check_gadget_optima() {
  CheckResult r{"gadget optima equal their source optima", false, ""};
  Rng rng(5150);
  for (int i = 0; i < 50; ++i) {
    SetCoverGadgetParams p;
    p.universe = 4 + static_cast<int>(rng.below(3));
    p.sets = 3 + static_cast<int>(rng.below(3));
    GadgetPair pair = generate_setcover_gadget(p, 60'000 + i);
    VcstSolution gadget = solve_vcst_exact(as_vcst(pair.gadget));
    auto [universe, family] = as_set_cover(pair.source);
    SetCoverSolution cover = solve_set_cover_exact(universe, family);
    if (gadget.objective != cover.weight) {
      r.detail = fmt("cover gadget %d: optimum %s vs source %s", i,
                     gadget.objective.to_string().c_str(),
                     cover.weight.to_string().c_str());
      return r;
    }
  }
  const std::pair<int, int> shapes[] = {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 2}};
  for (int i = 0; i < 20; ++i) {
    GridGadgetParams p;
    p.rows = shapes[i % 5].first;
    p.cols = shapes[i % 5].second;
    p.terminals = 2 + i % 2;
    GadgetPair pair = generate_grid_gadget(p, 70'000 + i);
    VcstSolution gadget = solve_vcst_exact(as_vcst(pair.gadget));
    Graph grid = as_grid_steiner(pair.source);
    Fixed source = solve_edge_steiner_exact(grid, pair.source.terminals).second;
    if (gadget.objective != source) {
      r.detail = fmt("grid gadget %d (%dx%d): optimum %s vs source %s", i,
                     p.rows, p.cols, gadget.objective.to_string().c_str(),
                     source.to_string().c_str());
      return r;
    }
  }
  r.pass = true;
  r.detail = "50 cover gadgets and 20 grid gadgets; every gadget optimum "
             "equals its source optimum exactly";
  return r;
}

// --- debt checks ----------------------------------------------------------------

// On planar instances the primal-dual output stays within factor 11 of the
// exact optimum, and every growth snapshot obeys the contact caps (11
// contact edges and 2 contacted vertices per active component).
CheckResult check_planar_debt() {
  CheckResult r{"planar primal dual within factor eleven and debt caps", false,
                ""};
  double worst_ratio = 0.0;
  double worst_contacts = 0.0;
  for (int i = 0; i < 100; ++i) {
    PlanarGenParams p;
    p.n = 6 + i % 7;
    p.terminals = 2 + i % 3;
    VcstInstance vi = as_vcst(generate_random_planar(p, 80'000 + i));
    ActivationInstance act = encode_vcst_as_activation(vi);
    ActivationSolution sol = solve_activation_minor_free(act);
    Verdict v = validate_activation_solution(act, sol);
    if (!v.ok) {
      r.detail = fmt("instance %d: output invalid: %s", i, v.violation.c_str());
      return r;
    }
    VcstSolution exact = solve_vcst_exact(vi);
    if (sol.objective < exact.objective) {
      r.detail = fmt("instance %d: output below the exact optimum", i);
      return r;
    }
    double ratio = sol.objective.to_double() / exact.objective.to_double();
    worst_ratio = std::max(worst_ratio, ratio);
    if (sol.objective.to_double() >
        11.0 * exact.objective.to_double() + 1e-9) {
      r.detail = fmt("instance %d: ratio %.6f above 11", i, ratio);
      return r;
    }
    NwsReduction red = reduce_activation_to_nws(act);
    auto [nws, trace] = solve_nws_pd(red.instance);
    (void)nws;
    DebtReport report = check_debt_bounds(red, trace, /*planar=*/true);
    if (!report.all_ok()) {
      r.detail = fmt("instance %d: a growth snapshot violated the caps", i);
      return r;
    }
    worst_contacts = std::max(worst_contacts, report.gamma_max);
  }
  r.pass = true;
  r.detail = fmt("100 planar instances; max output / optimum ratio %.3f "
                 "(cap 11); every snapshot within the contact caps, max "
                 "contact edges per active component %.2f",
                 worst_ratio, worst_contacts);
  return r;
}

// --- registry -------------------------------------------------------------------

struct RegisteredCheck {
  const char* suite;
  const char* name;
  CheckResult (*run)();
};

constexpr RegisteredCheck kChecks[] = {
    {"oracles", "independent exact solvers agree", check_exact_solvers_agree},
    {"geometry", "partition and packing constants", check_partition_constants},
    {"geometry", "dense clusters force a close pair", check_close_pair},
    {"lp", "flow relaxation lower-bounds the connected-domination optimum",
     check_relaxation_lower_bound},
    {"lp", "scaled relaxation point covers fractionally", check_cover_scaling},
    {"lp", "rerouted flow stays feasible within the scaled budget",
     check_reroute_budget},
    {"lp", "metric tree within twice both lower bounds", check_tree_factor},
    {"lp", "certified rounding chain holds end to end", check_rounding_chain},
    {"reductions", "domination solutions lift without cost increase",
     check_domination_lift},
    {"reductions", "activation round-trip is exact on small instances",
     check_activation_roundtrip},
    {"reductions", "gadget optima equal their source optima",
     check_gadget_optima},
    {"debt", "planar primal dual within factor eleven and debt caps",
     check_planar_debt},
};

CheckResult run_guarded(const RegisteredCheck& c) {
  try {
    CheckResult r = c.run();
    r.name = c.name;
    return r;
  } catch (const std::exception& e) {
    // A check must report, not abort, so unexpected throws become failures.
    return {c.name, false, std::string("unexpected exception: ") + e.what()};
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"oracles", "geometry", "lp", "reductions", "debt"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  bool known = false;
  for (const std::string& name : verify_suite_names())
    if (name == suite) known = true;
  if (!known)
    throw InvalidInstanceError("unknown verify suite: " + suite);
  std::vector<CheckResult> out;
  for (const RegisteredCheck& c : kChecks)
    if (suite == c.suite) out.push_back(run_guarded(c));
  return out;
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const RegisteredCheck& c : kChecks) out.push_back(run_guarded(c));
  return out;
}

}  // namespace vcst
