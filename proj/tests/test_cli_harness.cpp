#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "test_util.hpp"
#include "vcst/exact.hpp"
#include "vcst/generators.hpp"
#include "vcst/io.hpp"
#include "vcst/reductions.hpp"
#include "vcst/rng.hpp"
#include "vcst/verify.hpp"

using namespace vcst;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

InstanceFile small_vcst_file() {
  InstanceFile f;
  f.kind = InstanceKind::Vcst;
  f.family = "hand";
  f.seed = 11;
  f.graph.n = 4;
  f.graph.edges = {{0, 1}, {1, 2}, {2, 3}};
  f.graph.weights = {fx("1.5"), fx("2"), fx("0.25"), fx("inf")};
  f.terminals = {0, 3};
  return f;
}

std::string canonical(const InstanceFile& f) { return instance_to_text(f); }

// Runs one shell command, returns its exit code (-1 when the shell died).
int run_cli(const std::string& args, const std::string& log_path) {
  std::string cmd = std::string(VCST_CLI_PATH) + " " + args + " > " +
                    log_path + " 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl =
        (fs::temp_directory_path() / "vcst-cli-XXXXXX").string();
    path = mkdtemp(tmpl.data());
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("instance files reserialize byte for byte") {
  std::vector<InstanceFile> files;
  files.push_back(small_vcst_file());

  // Every kind a generator can produce, plus hand-built activation and
  // set-cover payloads.
  UdgGenParams udg;
  udg.n = 7;
  files.push_back(generate_random_udg(udg, 5));
  udg.kind = InstanceKind::Cds;
  files.push_back(generate_random_udg(udg, 6));
  udg.kind = InstanceKind::Nws;
  files.push_back(generate_random_udg(udg, 7));
  PlanarGenParams planar;
  files.push_back(generate_random_planar(planar, 8));
  GadgetPair grid = generate_grid_gadget(GridGadgetParams{}, 9);
  files.push_back(grid.gadget);
  files.push_back(grid.source);
  GadgetPair cover = generate_setcover_gadget(SetCoverGadgetParams{}, 10);
  files.push_back(cover.gadget);
  files.push_back(cover.source);

  InstanceFile act;
  act.kind = InstanceKind::Activation;
  act.family = "hand";
  act.graph.n = 3;
  act.graph.edges = {{0, 1}, {1, 2}};
  act.graph.weights = {fx("1"), fx("1"), fx("1")};
  act.terminals = {0, 2};
  act.levels = {fx("0"), fx("2.5")};
  act.tables = {{0b00, 0b10}, {0b10, 0b11}};
  files.push_back(act);

  TempDir dir;
  for (std::size_t i = 0; i < files.size(); ++i) {
    CAPTURE(i);
    std::string once = canonical(files[i]);
    InstanceFile reread = instance_from_text(once);
    CHECK(canonical(reread) == once);
    CHECK(once.back() == '\n');

    std::string path = dir.file(("f" + std::to_string(i) + ".json").c_str());
    save_instance(files[i], path);
    CHECK(slurp(path) == once);
    CHECK(canonical(load_instance(path)) == once);
  }
}

TEST_CASE("malformed instance files are rejected with reasons") {
  using nlohmann::json;
  std::string base = canonical(small_vcst_file());
  CHECK_NOTHROW(instance_from_text(base));

  auto mutate = [&](const std::function<void(json&)>& fn) {
    json j = json::parse(base);
    fn(j);
    return j.dump(2) + "\n";
  };

  CHECK_THROWS_AS(instance_from_text("not json"), InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) { j["schema"] = 2; })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) { j["extra"] = 1; })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(
      instance_from_text(mutate([](json& j) { j["kind"] = "mystery"; })),
      InvalidInstanceError);
  CHECK_THROWS_AS(
      instance_from_text(mutate([](json& j) { j.erase("graph"); })),
      InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["graph"]["weights"] = {"1", "2"};
                  })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["graph"]["edges"].push_back({3, 9});
                  })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["terminals"] = {3, 0};
                  })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["graph"]["weights"][0] = "1.2345678";
                  })),
                  InvalidInstanceError);
  // Payload of a different kind must not ride along.
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["set_cover"] = {{"universe", 2},
                                      {"sets", json::array()}};
                  })),
                  InvalidInstanceError);
  CHECK_THROWS_AS(instance_from_text(mutate([](json& j) {
                    j["kind"] = "activation";
                  })),
                  InvalidInstanceError);
}

TEST_CASE("generators are deterministic and shaped as documented") {
  UdgGenParams udg;
  udg.n = 9;
  udg.terminals = 3;
  CHECK(canonical(generate_random_udg(udg, 42)) ==
        canonical(generate_random_udg(udg, 42)));
  CHECK(canonical(generate_random_udg(udg, 42)) !=
        canonical(generate_random_udg(udg, 43)));
  InstanceFile u = generate_random_udg(udg, 42);
  CHECK(u.graph.unit_disk);
  CHECK(static_cast<int>(u.graph.coords.size()) == 9);
  CHECK(as_vcst(u).terminals.size() == 3);

  // Grid gadget: each grid edge contributes three subdivision vertices.
  GridGadgetParams gp;
  gp.rows = 2;
  gp.cols = 2;
  GadgetPair pair = generate_grid_gadget(gp, 1);
  CHECK(pair.gadget.graph.n == 4 + 3 * 4);
  CHECK(pair.source.graph.n == 4);
  CHECK(pair.source.graph.lengths.size() == pair.source.graph.edges.size());
  CHECK(canonical(generate_grid_gadget(gp, 1).gadget) ==
        canonical(pair.gadget));

  GadgetPair cover = generate_setcover_gadget(SetCoverGadgetParams{}, 2);
  CHECK(cover.gadget.graph.n == 5 + 4);
  CHECK(static_cast<int>(cover.gadget.terminals.size()) ==
        cover.gadget.graph.n);
  auto [universe, family] = as_set_cover(cover.source);
  CHECK(universe == 5);
  CHECK(family.size() == 4);

  // Planar family: simple planar edge count, connectivity, reproducibility.
  Rng rng(2024);
  for (int round = 0; round < 20; ++round) {
    PlanarGenParams pp;
    pp.n = 4 + static_cast<int>(rng.below(9));
    pp.terminals = 2;
    InstanceFile f = generate_random_planar(pp, 900 + round);
    CHECK(static_cast<int>(f.graph.edges.size()) <= 3 * pp.n - 6);
    VcstInstance inst = as_vcst(f);
    CHECK(is_connected_subset(inst.graph,
                              std::vector<char>(inst.graph.n(), 1)));
    CHECK(canonical(generate_random_planar(pp, 900 + round)) == canonical(f));
  }
}

TEST_CASE("benchmark rows format and guard their ratio invariants") {
  CHECK(bench_csv_header() ==
        "instance_id,n,m,kind,algorithm,objective,opt,ratio,certs,wall_ms");
  BenchRow row;
  row.instance_id = "udg-7";
  row.n = 7;
  row.m = 12;
  row.kind = InstanceKind::Cds;
  row.algorithm = "cds-lp";
  row.objective = fx("3.5");
  row.opt = fx("3");
  row.ratio = 3.5 / 3.0;
  row.certs = "1111";
  row.wall_ms = 21;
  CHECK(bench_csv_row(row) == "udg-7,7,12,cds,cds-lp,3.5,3,1.166667,1111,21");

  BenchRow bare = row;
  bare.opt.reset();
  bare.ratio.reset();
  bare.certs = "-";
  CHECK(bench_csv_row(bare) == "udg-7,7,12,cds,cds-lp,3.5,,,-,21");

  BenchRow missing_ratio = row;
  missing_ratio.ratio.reset();
  CHECK_THROWS_AS(bench_csv_row(missing_ratio), InternalError);
  BenchRow beat = row;
  beat.ratio = 0.9;
  CHECK_THROWS_AS(bench_csv_row(beat), InternalError);
  BenchRow comma = row;
  comma.instance_id = "a,b";
  CHECK_THROWS_AS(bench_csv_row(comma), InvalidInstanceError);
}

TEST_CASE("verification suites are named and individually runnable") {
  std::vector<std::string> names = verify_suite_names();
  CHECK(names == std::vector<std::string>{"oracles", "geometry", "lp",
                                          "reductions", "debt"});
  CHECK_THROWS_AS(run_verify_suite("bogus"), InvalidInstanceError);
  for (const CheckResult& r : run_verify_suite("geometry")) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
    CHECK(!r.detail.empty());
  }
}

TEST_CASE("the command line matches its documented contract") {
  using nlohmann::json;
  TempDir dir;
  std::string log = dir.file("log.txt");

  CHECK(run_cli("", log) == 2);
  CHECK(run_cli("solve", log) == 2);
  CHECK(run_cli("--help", log) == 0);

  // A uniform-weight path on five vertices, every vertex a terminal: the
  // only spanning tree is the path itself and its cheapest cover has two
  // vertices.
  InstanceFile path5;
  path5.kind = InstanceKind::Vcst;
  path5.graph.n = 5;
  path5.graph.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  path5.graph.weights = std::vector<Fixed>(5, fx("1"));
  path5.terminals = {0, 1, 2, 3, 4};
  save_instance(path5, dir.file("path5.json"));
  std::string sol_path = dir.file("sol.json");
  CHECK(run_cli("solve " + dir.file("path5.json") +
                    " --algorithm exact --opt -o " + sol_path,
                log) == 0);
  json sol = json::parse(slurp(sol_path));
  CHECK(sol.at("objective") == "2");
  CHECK(sol.at("ratio") == 1.0);
  CHECK(sol.at("solution").at("cover").size() == 2);

  // Generated gadget pair: both sides solve to the same optimum.
  CHECK(run_cli("generate --family grid-gadget --rows 2 --cols 2 --seed 3 -o " +
                    dir.file("gadget.json") + " --source-out " +
                    dir.file("grid.json"),
                log) == 0);
  CHECK(run_cli("solve " + dir.file("gadget.json") +
                    " --algorithm exact -o " + dir.file("ga.json"),
                log) == 0);
  CHECK(run_cli("solve " + dir.file("grid.json") + " --algorithm exact -o " +
                    dir.file("gr.json"),
                log) == 0);
  CHECK(json::parse(slurp(dir.file("ga.json"))).at("objective") ==
        json::parse(slurp(dir.file("gr.json"))).at("objective"));

  // Kind mismatch is a usage error; a disconnected instance is infeasible.
  CHECK(run_cli("solve " + dir.file("path5.json") +
                    " --algorithm activation-exact",
                log) == 2);
  CHECK(run_cli("generate --family random-udg --n 2 --terminals 2 --box 9 "
                "--allow-disconnected --seed 3 -o " +
                    dir.file("far.json"),
                log) == 0);
  std::string far_log = dir.file("far_out.txt");
  CHECK(run_cli("solve " + dir.file("far.json") + " --algorithm exact",
                far_log) == 3);
  json err = json::parse(slurp(far_log));
  CHECK(err.at("error") == "infeasible");

  // The rounding pipeline needs coordinates, so the bare path is a usage
  // error and a generated unit-disk instance succeeds.
  CHECK(run_cli("generate --family random-udg --n 6 --terminals 2 --seed 8 -o " +
                    dir.file("u8.json"),
                log) == 0);
  CHECK(run_cli("solve " + dir.file("path5.json") + " --algorithm cds-lp",
                log) == 2);

  // Bench rows append under a single header; repeated runs add rows only.
  std::string csv = dir.file("rows.csv");
  std::string bench_cmd = "solve " + dir.file("u8.json") +
                          " --algorithm cds-lp --all-roots --opt --bench " +
                          csv + " -o " + dir.file("ignored.json");
  CHECK(run_cli(bench_cmd, log) == 0);
  CHECK(run_cli(bench_cmd, log) == 0);
  std::istringstream lines(slurp(csv));
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == bench_csv_header());
  CHECK(rows[1] == rows[2]);
  CHECK(rows[1].substr(0, 3) == "u8,");
  std::string batch_csv = dir.file("batch.csv");
  CHECK(run_cli("bench " + dir.file("path5.json") + " " + dir.file("u8.json") +
                    " --algorithm exact --opt -o " + batch_csv,
                log) == 0);
  std::istringstream batch(slurp(batch_csv));
  rows.clear();
  for (std::string line; std::getline(batch, line);) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].substr(0, 6) == "path5,");
  CHECK(rows[2].substr(0, 3) == "u8,");

  // Trace and LP exports produce parseable artifacts.
  CHECK(run_cli("solve " + dir.file("u8.json") +
                    " --algorithm pd-planar --trace " + dir.file("tr.json") +
                    " -o " + dir.file("pd.json"),
                log) == 0);
  json trace = json::parse(slurp(dir.file("tr.json")));
  CHECK(trace.contains("events"));
  CHECK(trace.contains("xbar"));
  CHECK(run_cli("solve " + dir.file("u8.json") +
                    " --algorithm cds-lp --export-lp " + dir.file("m.lp") +
                    " -o " + dir.file("lp.json"),
                log) == 0);
  CHECK(slurp(dir.file("m.lp")).substr(0, 8) == "Minimize");
}
