// Command-line harness: instance generation, solving with every algorithm
// in the library, benchmark CSV production, and the verification battery.
//
// Exit codes: 0 ok, 2 usage (bad flags, bad files, size caps), 3 infeasible
// instance, 4 internal invariant violation.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcst/cds_approx.hpp"
#include "vcst/exact.hpp"
#include "vcst/fixed.hpp"
#include "vcst/generators.hpp"
#include "vcst/graph.hpp"
#include "vcst/io.hpp"
#include "vcst/lp.hpp"
#include "vcst/nws_pd.hpp"
#include "vcst/problems.hpp"
#include "vcst/reductions.hpp"
#include "vcst/verify.hpp"

namespace {

using nlohmann::json;
using namespace vcst;

[[noreturn]] void usage_error(const std::string& why) {
  throw InvalidInstanceError(why);
}

std::string instance_id_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) usage_error("cannot open for writing: " + path);
  out << text;
  if (!out.flush()) usage_error("write failed: " + path);
}

// Decimal flag (same grammar as instance files: up to six fractional
// digits); gadget and planar generators take whole units only.
std::int64_t micro_units_flag(const std::string& text, const char* flag) {
  Fixed f = Fixed::parse(text);
  if (f.is_infinite()) usage_error(std::string(flag) + " must be finite");
  return f.units();
}

int whole_units_flag(const std::string& text, const char* flag) {
  std::int64_t units = micro_units_flag(text, flag);
  if (units % Fixed::kScale != 0)
    usage_error(std::string(flag) + " must be a whole number for this family");
  return static_cast<int>(units / Fixed::kScale);
}

int worker_count(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("VCST_WORKERS")) {
    int cap = std::atoi(env);
    if (cap < 1) usage_error("VCST_WORKERS must be a positive integer");
    workers = std::min(workers, cap);
  }
  return std::max(1, std::min<int>(workers, static_cast<int>(jobs)));
}

// --- generate -------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string out;
  std::string source_out;
  std::string kind = "vcst";
  std::uint64_t seed = 0;
  int n = 10;
  int terminals = 3;
  int rows = 2;
  int cols = 2;
  int universe = 5;
  int sets = 4;
  std::string box = "2.5";
  std::string weight_lo = "1";
  std::string weight_hi = "3";
  bool spanning = false;
  bool allow_disconnected = false;
  bool kind_given = false;
};

int run_generate(const GenerateArgs& a) {
  InstanceFile file;
  std::optional<InstanceFile> source;
  if (a.family == "random-udg") {
    UdgGenParams p;
    p.n = a.n;
    p.box_units = micro_units_flag(a.box, "--box");
    p.weight_lo = micro_units_flag(a.weight_lo, "--weight-lo");
    p.weight_hi = micro_units_flag(a.weight_hi, "--weight-hi");
    p.terminals = a.terminals;
    p.spanning = a.spanning;
    p.require_connected = !a.allow_disconnected;
    InstanceKind k = instance_kind_from_string(a.kind);
    if (k != InstanceKind::Vcst && k != InstanceKind::Cds && k != InstanceKind::Nws)
      usage_error("--kind for random-udg must be vcst, cds or nws");
    p.kind = k;
    file = generate_random_udg(p, a.seed);
  } else if (a.family == "grid-gadget") {
    if (a.kind_given) usage_error("--kind only applies to random-udg");
    GridGadgetParams p;
    p.rows = a.rows;
    p.cols = a.cols;
    p.weight_lo = whole_units_flag(a.weight_lo, "--weight-lo");
    p.weight_hi = whole_units_flag(a.weight_hi, "--weight-hi");
    p.terminals = a.terminals;
    GadgetPair pair = generate_grid_gadget(p, a.seed);
    file = std::move(pair.gadget);
    source = std::move(pair.source);
  } else if (a.family == "setcover-gadget") {
    if (a.kind_given) usage_error("--kind only applies to random-udg");
    SetCoverGadgetParams p;
    p.universe = a.universe;
    p.sets = a.sets;
    GadgetPair pair = generate_setcover_gadget(p, a.seed);
    file = std::move(pair.gadget);
    source = std::move(pair.source);
  } else if (a.family == "random-planar") {
    if (a.kind_given) usage_error("--kind only applies to random-udg");
    PlanarGenParams p;
    p.n = a.n;
    p.box_units = micro_units_flag(a.box, "--box");
    p.weight_lo = whole_units_flag(a.weight_lo, "--weight-lo");
    p.weight_hi = whole_units_flag(a.weight_hi, "--weight-hi");
    p.terminals = a.terminals;
    file = generate_random_planar(p, a.seed);
  } else {
    usage_error("unknown family: " + a.family);
  }
  save_instance(file, a.out);
  std::printf("wrote %s (kind %s, n=%d, m=%zu)\n", a.out.c_str(),
              to_string(file.kind).c_str(), file.graph.n,
              file.graph.edges.size());
  if (!a.source_out.empty()) {
    if (!source)
      usage_error("--source-out only applies to the gadget families");
    save_instance(*source, a.source_out);
    std::printf("wrote %s (kind %s)\n", a.source_out.c_str(),
                to_string(source->kind).c_str());
  }
  return 0;
}

// --- solve core -----------------------------------------------------------------

struct SolveOptions {
  std::string algorithm;
  SetCoverBackend backend = SetCoverBackend::Exact;
  bool all_roots = false;
  int root = 0;
  bool want_opt = false;
  bool want_lp = false;
  bool want_trace = false;
};

struct SolveOutcome {
  json result;
  BenchRow row;
  std::string lp_text;
  std::string trace_json;
};

json fixed_json(const Fixed& f) { return f.to_string(); }

json int_array(const std::vector<int>& v) { return json(v); }

// Turns an activation assignment on an encoded cover instance back into a
// tree plus cover: BFS over the activated edges from the first terminal,
// cover = spanned vertices whose assigned level reaches their weight.
VcstSolution cover_solution_from_levels(const VcstInstance& vi,
                                        const ActivationInstance& ai,
                                        const ActivationSolution& asol) {
  const Graph& g = vi.graph;
  std::vector<char> active(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    active[e] =
        ai.active_for(e, u, asol.level_of[u], v, asol.level_of[v]) ? 1 : 0;
  }
  std::vector<int> parent_edge(g.n(), -1);
  std::vector<char> seen(g.n(), 0);
  std::vector<int> queue{vi.terminals.front()};
  seen[vi.terminals.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      int e = *g.edge_id(u, w);
      if (!active[e] || seen[w]) continue;
      seen[w] = 1;
      parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  for (int t : vi.terminals)
    if (!seen[t])
      throw InternalError("assignment does not connect the terminals");
  VcstSolution sol;
  for (int v = 0; v < g.n(); ++v)
    if (parent_edge[v] >= 0) sol.tree.push_back(parent_edge[v]);
  std::sort(sol.tree.begin(), sol.tree.end());
  if (!sol.tree.empty()) {
    for (int v : tree_vertices(g, sol.tree))
      if (ai.levels[asol.level_of[v]] >= g.weights()[v])
        sol.cover.push_back(v);
  }
  sol.objective = weight_sum(g, sol.cover);
  return sol;
}

void require_validated(const Verdict& v) {
  if (!v.ok) throw InternalError("output failed validation: " + v.violation);
}

// Exact optimum of the file's problem, for ratio reporting.
Fixed exact_optimum(const InstanceFile& f) {
  switch (f.kind) {
    case InstanceKind::Vcst:
      return solve_vcst_exact(as_vcst(f)).objective;
    case InstanceKind::Cds:
      return solve_cds_exact(as_cds(f)).objective;
    case InstanceKind::Nws:
      return solve_nws_exact(as_nws(f)).added_weight;
    case InstanceKind::Activation:
      return solve_activation_exact(as_activation(f)).objective;
    case InstanceKind::SetCover: {
      auto [universe, family] = as_set_cover(f);
      return solve_set_cover_exact(universe, family).weight;
    }
    case InstanceKind::GridSteiner:
      return solve_edge_steiner_exact(as_grid_steiner(f), f.terminals).second;
  }
  throw InternalError("unhandled instance kind");
}

void fill_vcst_payload(json* solution, const VcstSolution& sol) {
  (*solution)["tree"] = int_array(sol.tree);
  (*solution)["cover"] = int_array(sol.cover);
}

void fill_cds_payload(json* solution, const CdsSolution& sol) {
  (*solution)["domset"] = int_array(sol.domset);
  (*solution)["tree"] = int_array(sol.tree);
}

SolveOutcome run_solve(const InstanceFile& f, const std::string& id,
                       const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  json solution = json::object();
  json certificates;
  Fixed objective;
  std::string certs = "-";
  SolveOutcome out;

  auto unsupported = [&]() -> void {
    usage_error("algorithm " + opt.algorithm + " does not apply to kind " +
                to_string(f.kind));
  };

  if (opt.algorithm == "exact") {
    switch (f.kind) {
      case InstanceKind::Vcst: {
        VcstInstance inst = as_vcst(f);
        VcstSolution sol = solve_vcst_exact(inst);
        require_validated(validate_vcst_solution(inst, sol));
        fill_vcst_payload(&solution, sol);
        objective = sol.objective;
        break;
      }
      case InstanceKind::Cds: {
        CdsInstance inst = as_cds(f);
        CdsSolution sol = solve_cds_exact(inst);
        require_validated(validate_cds_solution(inst, sol));
        fill_cds_payload(&solution, sol);
        objective = sol.objective;
        break;
      }
      case InstanceKind::Nws: {
        NwsInstance inst = as_nws(f);
        NwsSolution sol = solve_nws_exact(inst);
        require_validated(validate_nws_solution(inst, sol));
        solution["chosen"] = int_array(sol.chosen);
        solution["tree"] = int_array(sol.tree);
        objective = sol.added_weight;
        break;
      }
      case InstanceKind::SetCover: {
        auto [universe, family] = as_set_cover(f);
        SetCoverSolution sol = solve_set_cover_exact(universe, family);
        std::vector<char> covered(universe, 0);
        for (int s : sol.chosen)
          for (int e : family[s].elements) covered[e] = 1;
        for (int e = 0; e < universe; ++e)
          if (!covered[e]) throw InternalError("cover misses an element");
        solution["chosen"] = int_array(sol.chosen);
        objective = sol.weight;
        break;
      }
      case InstanceKind::GridSteiner: {
        Graph g = as_grid_steiner(f);
        auto [edges, len] = solve_edge_steiner_exact(g, f.terminals);
        if (length_sum(g, edges) != len)
          throw InternalError("tree length mismatch");
        if (!edges.empty()) {
          std::vector<int> verts = tree_vertices(g, edges);
          for (int t : f.terminals)
            if (!std::binary_search(verts.begin(), verts.end(), t))
              throw InternalError("tree misses a terminal");
        }
        solution["tree"] = int_array(edges);
        objective = len;
        break;
      }
      default:
        usage_error("use activation-exact for activation instances");
    }
  } else if (opt.algorithm == "activation-exact") {
    if (f.kind != InstanceKind::Activation) unsupported();
    ActivationInstance inst = as_activation(f);
    ActivationSolution sol = solve_activation_exact(inst);
    require_validated(validate_activation_solution(inst, sol));
    json levels = json::array();
    for (int idx : sol.level_of) levels.push_back(fixed_json(inst.levels[idx]));
    solution["levels"] = levels;
    objective = sol.objective;
  } else if (opt.algorithm == "cds-lp" || opt.algorithm == "cds-spanning") {
    if (f.kind != InstanceKind::Cds && f.kind != InstanceKind::Vcst)
      unsupported();
    std::optional<VcstInstance> vi;
    if (f.kind == InstanceKind::Vcst) vi.emplace(as_vcst(f));
    CdsInstance ci = vi ? reduce_vcst_to_cds(*vi) : as_cds(f);
    CdsSolution sol;
    if (opt.algorithm == "cds-spanning") {
      if (static_cast<int>(ci.terminals.size()) != ci.graph.n())
        usage_error("cds-spanning requires every vertex to be a terminal");
      SpanningReport rep = solve_cds_spanning_case(ci, opt.backend);
      sol = std::move(rep.solution);
      certificates = json::object();
      certificates["beta_cert"] = rep.beta_cert;
      certificates["domset_lp"] = rep.domset_lp;
    } else {
      RoundingReport rep;
      std::tie(sol, rep) =
          opt.all_roots ? solve_cds_all_roots(ci, opt.backend)
                        : solve_cds_rounding(ci, opt.root, opt.backend);
      certificates = json::parse(rep.to_json());
      certs.clear();
      for (bool flag : {rep.cover_scale_ok, rep.reroute_ok,
                        rep.steiner_factor_ok, rep.pendant_ok})
        certs += flag ? '1' : '0';
      if (opt.want_lp)
        out.lp_text = build_cds_flow_lp(ci, rep.root).to_lp_text();
    }
    require_validated(validate_cds_solution(ci, sol));
    if (vi) {
      VcstSolution lifted = lift_cds_to_vcst(*vi, sol);
      require_validated(validate_vcst_solution(*vi, lifted));
      fill_vcst_payload(&solution, lifted);
      json dom = json::object();
      fill_cds_payload(&dom, sol);
      dom["objective"] = fixed_json(sol.objective);
      solution["domination"] = dom;
      objective = lifted.objective;
    } else {
      fill_cds_payload(&solution, sol);
      objective = sol.objective;
    }
  } else if (opt.algorithm == "pd-planar") {
    if (f.kind == InstanceKind::Nws) {
      NwsInstance inst = as_nws(f);
      auto [sol, trace] = solve_nws_pd(inst);
      require_validated(validate_nws_solution(inst, sol));
      solution["chosen"] = int_array(sol.chosen);
      solution["tree"] = int_array(sol.tree);
      objective = sol.added_weight;
      if (opt.want_trace) out.trace_json = trace.to_json();
    } else if (f.kind == InstanceKind::Activation ||
               f.kind == InstanceKind::Vcst) {
      std::optional<VcstInstance> vi;
      if (f.kind == InstanceKind::Vcst) vi.emplace(as_vcst(f));
      ActivationInstance ai =
          vi ? encode_vcst_as_activation(*vi) : as_activation(f);
      ActivationSolution asol = solve_activation_minor_free(ai);
      require_validated(validate_activation_solution(ai, asol));
      if (vi) {
        VcstSolution derived = cover_solution_from_levels(*vi, ai, asol);
        require_validated(validate_vcst_solution(*vi, derived));
        fill_vcst_payload(&solution, derived);
        objective = derived.objective;
      } else {
        json levels = json::array();
        for (int idx : asol.level_of)
          levels.push_back(fixed_json(ai.levels[idx]));
        solution["levels"] = levels;
        objective = asol.objective;
      }
      if (opt.want_trace) {
        NwsReduction red = reduce_activation_to_nws(ai);
        out.trace_json = solve_nws_pd(red.instance).second.to_json();
      }
    } else {
      unsupported();
    }
  } else {
    usage_error("unknown algorithm: " + opt.algorithm);
  }

  std::optional<Fixed> optimum;
  std::optional<double> ratio;
  if (opt.want_opt) {
    optimum = exact_optimum(f);
    ratio = objective.to_double() / optimum->to_double();
  }
  auto t1 = std::chrono::steady_clock::now();
  std::int64_t wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  out.row = BenchRow{id,
                     f.kind == InstanceKind::SetCover
                         ? f.universe
                         : f.graph.n,
                     f.kind == InstanceKind::SetCover
                         ? static_cast<int>(f.sets.size())
                         : static_cast<int>(f.graph.edges.size()),
                     f.kind,
                     opt.algorithm,
                     objective,
                     optimum,
                     ratio,
                     certs,
                     wall_ms};

  out.result = json::object();
  out.result["algorithm"] = opt.algorithm;
  out.result["certificates"] = certificates;
  out.result["instance"] = id;
  out.result["kind"] = to_string(f.kind);
  out.result["objective"] = fixed_json(objective);
  out.result["opt"] = optimum ? json(fixed_json(*optimum)) : json();
  out.result["ratio"] = ratio ? json(*ratio) : json();
  out.result["solution"] = solution;
  out.result["wall_ms"] = wall_ms;
  return out;
}

void append_bench_rows(const std::string& path,
                       const std::vector<BenchRow>& rows) {
  bool fresh = !std::filesystem::exists(path) ||
               std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) usage_error("cannot open for writing: " + path);
  if (fresh) out << bench_csv_header() << "\n";
  for (const BenchRow& row : rows) out << bench_csv_row(row) << "\n";
  if (!out.flush()) usage_error("write failed: " + path);
}

// --- subcommand drivers -----------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string out;
  std::string bench;
  std::string export_lp;
  std::string trace;
  SolveOptions options;
};

int run_solve_command(const SolveArgs& a) {
  SolveOptions opt = a.options;
  opt.want_lp = !a.export_lp.empty();
  opt.want_trace = !a.trace.empty();
  if (opt.want_lp && opt.algorithm != "cds-lp")
    usage_error("--export-lp only applies to cds-lp");
  if (opt.want_trace && opt.algorithm != "pd-planar")
    usage_error("--trace only applies to pd-planar");
  InstanceFile f = load_instance(a.instance);
  SolveOutcome outcome = run_solve(f, instance_id_from_path(a.instance), opt);
  if (opt.want_lp) write_text_file(a.export_lp, outcome.lp_text);
  if (opt.want_trace) write_text_file(a.trace, outcome.trace_json + "\n");
  if (!a.bench.empty()) append_bench_rows(a.bench, {outcome.row});
  std::string text = outcome.result.dump(2) + "\n";
  if (a.out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(a.out, text);
  return 0;
}

struct BenchArgs {
  std::vector<std::string> instances;
  std::string out;
  SolveOptions options;
};

int run_bench_command(const BenchArgs& a) {
  std::vector<InstanceFile> files;
  files.reserve(a.instances.size());
  for (const std::string& path : a.instances) files.push_back(load_instance(path));

  std::vector<BenchRow> rows(files.size());
  std::vector<std::pair<int, std::string>> failures(files.size(), {0, ""});
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      try {
        rows[i] = run_solve(files[i], instance_id_from_path(a.instances[i]),
                            a.options)
                      .row;
      } catch (const InfeasibleError& e) {
        failures[i] = {3, e.what()};
      } catch (const InvalidInstanceError& e) {
        failures[i] = {2, e.what()};
      } catch (const SizeLimitError& e) {
        failures[i] = {2, e.what()};
      } catch (const std::exception& e) {
        failures[i] = {4, e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  int workers = worker_count(files.size());
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int exit_code = 0;
  std::vector<BenchRow> good;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (failures[i].first == 0) {
      good.push_back(rows[i]);
    } else {
      std::fprintf(stderr, "%s: %s\n", a.instances[i].c_str(),
                   failures[i].second.c_str());
      exit_code = std::max(exit_code, failures[i].first);
    }
  }
  if (a.out.empty()) {
    std::printf("%s\n", bench_csv_header().c_str());
    for (const BenchRow& row : good) std::printf("%s\n", bench_csv_row(row).c_str());
  } else {
    append_bench_rows(a.out, good);
  }
  return exit_code;
}

int run_verify_command(const std::string& suite) {
  std::vector<CheckResult> results =
      suite == "all" ? run_all_checks() : run_verify_suite(suite);
  int failed = 0;
  for (const CheckResult& r : results) {
    std::printf("%s  %s\n      %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VC-weighted Steiner tree toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "write a random instance file");
  cmd_gen
      ->add_option("--family", gen.family,
                   "random-udg | grid-gadget | setcover-gadget | random-planar")
      ->required()
      ->check(CLI::IsMember(
          {"random-udg", "grid-gadget", "setcover-gadget", "random-planar"}));
  cmd_gen->add_option("-o,--out", gen.out, "output instance path")->required();
  cmd_gen->add_option("--source-out", gen.source_out,
                      "companion source instance (gadget families)");
  cmd_gen->add_option("--seed", gen.seed, "generator seed");
  cmd_gen->add_option("--n", gen.n, "vertex count (random-udg, random-planar)");
  cmd_gen->add_option("--terminals", gen.terminals, "terminal count");
  cmd_gen->add_option("--rows", gen.rows, "grid rows (grid-gadget)");
  cmd_gen->add_option("--cols", gen.cols, "grid columns (grid-gadget)");
  cmd_gen->add_option("--universe", gen.universe,
                      "element count (setcover-gadget)");
  cmd_gen->add_option("--sets", gen.sets, "set count (setcover-gadget)");
  cmd_gen->add_option("--box", gen.box,
                      "square side, decimal units (random-udg, random-planar)");
  cmd_gen->add_option("--weight-lo", gen.weight_lo,
                      "smallest weight, decimal units");
  cmd_gen->add_option("--weight-hi", gen.weight_hi,
                      "largest weight, decimal units");
  cmd_gen->add_flag("--spanning", gen.spanning,
                    "every vertex a terminal (random-udg)");
  cmd_gen->add_flag("--allow-disconnected", gen.allow_disconnected,
                    "skip the connectivity retry (random-udg)");
  CLI::Option* kind_opt = cmd_gen->add_option(
      "--kind", gen.kind, "instance kind for random-udg: vcst | cds | nws");

  SolveArgs sol;
  CLI::App* cmd_solve = app.add_subcommand("solve", "solve one instance file");
  cmd_solve->add_option("instance", sol.instance, "instance path")->required();
  cmd_solve
      ->add_option("--algorithm", sol.options.algorithm,
                   "exact | cds-lp | cds-spanning | pd-planar | activation-exact")
      ->required()
      ->check(CLI::IsMember(
          {"exact", "cds-lp", "cds-spanning", "pd-planar", "activation-exact"}));
  std::string solve_backend = "exact";
  cmd_solve->add_option("--backend", solve_backend, "set-cover backend")
      ->check(CLI::IsMember({"exact", "greedy"}));
  CLI::Option* all_roots_opt = cmd_solve->add_flag(
      "--all-roots", sol.options.all_roots, "try every root (cds-lp)");
  CLI::Option* root_opt = cmd_solve->add_option(
      "--root", sol.options.root, "rounding root (cds-lp, default 0)");
  cmd_solve->add_flag("--opt", sol.options.want_opt,
                      "also compute the exact optimum and the ratio");
  cmd_solve->add_option("-o,--out", sol.out, "solution path (default stdout)");
  cmd_solve->add_option("--bench", sol.bench, "append one row to this CSV");
  cmd_solve->add_option("--export-lp", sol.export_lp,
                        "write the rooted relaxation as LP text (cds-lp)");
  cmd_solve->add_option("--trace", sol.trace,
                        "write the growth trace JSON (pd-planar)");

  BenchArgs bench;
  CLI::App* cmd_bench =
      app.add_subcommand("bench", "solve many instances, emit CSV rows");
  cmd_bench->add_option("instances", bench.instances, "instance paths")
      ->required();
  cmd_bench
      ->add_option("--algorithm", bench.options.algorithm,
                   "exact | cds-lp | cds-spanning | pd-planar | activation-exact")
      ->required()
      ->check(CLI::IsMember(
          {"exact", "cds-lp", "cds-spanning", "pd-planar", "activation-exact"}));
  std::string bench_backend = "exact";
  cmd_bench->add_option("--backend", bench_backend, "set-cover backend")
      ->check(CLI::IsMember({"exact", "greedy"}));
  cmd_bench->add_flag("--all-roots", bench.options.all_roots,
                      "try every root (cds-lp)");
  cmd_bench->add_option("--root", bench.options.root,
                        "rounding root (cds-lp, default 0)");
  cmd_bench->add_flag("--opt", bench.options.want_opt,
                      "also compute exact optima and ratios");
  cmd_bench->add_option("-o,--out", bench.out,
                        "CSV path, appended (default stdout)");

  std::string verify_suite = "all";
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the verification battery");
  cmd_verify->add_option("--suite", verify_suite, "suite name or all")
      ->check(CLI::IsMember(
          {"all", "oracles", "geometry", "lp", "reductions", "debt"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_gen->parsed()) {
      gen.kind_given = kind_opt->count() > 0;
      return run_generate(gen);
    }
    if (cmd_solve->parsed()) {
      sol.options.backend = solve_backend == "greedy" ? SetCoverBackend::Greedy
                                                      : SetCoverBackend::Exact;
      if (all_roots_opt->count() > 0 && root_opt->count() > 0)
        usage_error("--all-roots and --root are mutually exclusive");
      return run_solve_command(sol);
    }
    if (cmd_bench->parsed()) {
      bench.options.backend = bench_backend == "greedy"
                                  ? SetCoverBackend::Greedy
                                  : SetCoverBackend::Exact;
      return run_bench_command(bench);
    }
    if (cmd_verify->parsed()) return run_verify_command(verify_suite);
    std::fprintf(stderr, "no subcommand selected\n");
    return 2;
  } catch (const InfeasibleError& e) {
    json err;
    err["error"] = "infeasible";
    err["reason"] = e.what();
    std::printf("%s\n", err.dump().c_str());
    return 3;
  } catch (const InvalidInstanceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SizeLimitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
}
