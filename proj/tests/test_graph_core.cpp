#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "vcst/geometry.hpp"
#include "vcst/graph.hpp"
#include "vcst/problems.hpp"
#include "vcst/rng.hpp"

using namespace vcst;
using namespace testutil;

TEST_CASE("fixed-point parsing and formatting round-trips") {
  CHECK(Fixed::parse("1.5").units() == 1'500'000);
  CHECK(Fixed::parse("0.000001").units() == 1);
  CHECK(Fixed::parse("-2.25").units() == -2'250'000);
  CHECK(Fixed::parse("inf").is_infinite());
  CHECK(Fixed::parse("1.5").to_string() == "1.5");
  CHECK(Fixed::parse("10").to_string() == "10");
  CHECK(Fixed::parse("0.100000").to_string() == "0.1");
  CHECK_THROWS_AS(Fixed::parse("1.0000001"), InvalidInstanceError);
  CHECK_THROWS_AS(Fixed::parse("abc"), InvalidInstanceError);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Fixed f = Fixed::from_units(rng.range(-5'000'000'000, 5'000'000'000));
    CHECK(Fixed::parse(f.to_string()) == f);
  }
  CHECK((Fixed::infinity() + Fixed::from_int(3)).is_infinite());
}

TEST_CASE("unit-disk edges follow the exact distance rule") {
  std::vector<Point> pts{pt(0, 0), pt(0.9, 0), pt(0.9, 1.0)};
  std::vector<Fixed> ws(3, Fixed::from_int(1));
  Graph g = build_unit_disk_graph(pts, ws);
  CHECK(g.has_edge(0, 1));   // distance 0.9
  CHECK(g.has_edge(1, 2));   // distance 1.0 exactly: still an edge
  CHECK(!g.has_edge(0, 2));  // distance ~1.345

  // distance 1.01 is out
  Graph g2 = build_unit_disk_graph({pt(0, 0), pt(1.01, 0)},
                                   {Fixed::from_int(1), Fixed::from_int(1)});
  CHECK(g2.m() == 0);

  // right triangle with legs 0.6/0.8: hypotenuse exactly 1
  Graph g3 = build_unit_disk_graph({pt(0, 0), pt(0.6, 0.8)},
                                   {Fixed::from_int(1), Fixed::from_int(1)});
  CHECK(g3.m() == 1);

  CHECK_THROWS_AS(
      build_unit_disk_graph({pt(0, 0)}, {Fixed::from_int(-1)}),
      InvalidInstanceError);
}

TEST_CASE("graph construction validates shape") {
  GraphData d;
  d.n = 2;
  d.weights = {Fixed::from_int(1), Fixed::from_int(1)};
  d.edges = {{0, 0}};
  CHECK_THROWS_AS(Graph(std::move(d)), InvalidInstanceError);

  GraphData d2;
  d2.n = 2;
  d2.weights = {Fixed::from_int(1), Fixed::from_int(1)};
  d2.edges = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(std::move(d2)), InvalidInstanceError);
}

TEST_CASE("solution validator reports the first violation") {
  // triangle with unit weights, terminals {0, 2}
  GraphData d;
  d.n = 3;
  d.weights.assign(3, Fixed::from_int(1));
  d.edges = {{0, 1}, {1, 2}, {0, 2}};
  VcstInstance inst(Graph(std::move(d)), {0, 2});

  // valid: direct edge, cover {0}
  VcstSolution ok{{*inst.graph.edge_id(0, 2)}, {0}, Fixed::from_int(1)};
  CHECK(validate_vcst_solution(inst, ok).ok);

  // path through 1 with empty cover: uncovered edge
  VcstSolution uncovered{
      {*inst.graph.edge_id(0, 1), *inst.graph.edge_id(1, 2)}, {}, Fixed()};
  Verdict v1 = validate_vcst_solution(inst, uncovered);
  CHECK(!v1.ok);
  CHECK(v1.violation == "uncovered edge");

  // tree not spanning terminal 2
  VcstSolution missing{{*inst.graph.edge_id(0, 1)}, {0}, Fixed::from_int(1)};
  Verdict v2 = validate_vcst_solution(inst, missing);
  CHECK(!v2.ok);
  CHECK(v2.violation == "terminal not spanned");

  // cycle is not a tree
  VcstSolution cyclic{{0, 1, 2}, {0, 1, 2}, Fixed::from_int(3)};
  Verdict v3 = validate_vcst_solution(inst, cyclic);
  CHECK(!v3.ok);
  CHECK(v3.violation == "not a tree (cyclic or disconnected)");
}

TEST_CASE("tree vertex cover: known answers") {
  // path on five unit-weight vertices: cover weight 2
  Graph p5 = path_graph(5);
  std::vector<int> all_edges{0, 1, 2, 3};
  auto [cover, weight] = tree_min_vertex_cover(p5, all_edges);
  CHECK(weight == Fixed::from_int(2));
  CHECK(cover == std::vector<int>{1, 3});

  // star: the center alone
  Graph st = star_graph(6);
  std::vector<int> star_edges{0, 1, 2, 3, 4, 5};
  auto [scover, sweight] = tree_min_vertex_cover(st, star_edges);
  CHECK(sweight == Fixed::from_int(1));
  CHECK(scover == std::vector<int>{0});

  // no edges: empty cover
  auto [ecover, eweight] = tree_min_vertex_cover(p5, {});
  CHECK(ecover.empty());
  CHECK(eweight == Fixed());

  // disconnected input rejected
  CHECK_THROWS_AS(tree_min_vertex_cover(p5, std::vector<int>{0, 2}),
                  InvalidInstanceError);
}

TEST_CASE("tree vertex cover matches exhaustive search on random trees") {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 2 + static_cast<int>(rng.below(10));  // up to 11 vertices
    GraphData d;
    d.n = n;
    for (int v = 0; v < n; ++v)
      d.weights.push_back(Fixed::from_units(rng.range(0, 8'000'000)));
    for (int v = 1; v < n; ++v)
      d.edges.push_back({static_cast<int>(rng.below(v)), v});
    Graph g(std::move(d));
    std::vector<int> edges(g.m());
    for (int e = 0; e < g.m(); ++e) edges[e] = e;
    auto [cover, weight] = tree_min_vertex_cover(g, edges);
    CHECK(weight == brute_force_tree_cover(g, edges));
    // returned cover covers every edge and has the reported weight
    std::set<int> cs(cover.begin(), cover.end());
    for (int e : edges) {
      auto [u, v] = g.edge(e);
      CHECK((cs.count(u) || cs.count(v)));
    }
    CHECK(weight_sum(g, cover) == weight);
  }
}

TEST_CASE("square partition: cells, cliques, and the boundary rule") {
  // a point exactly on a cell corner belongs to the upper-right cell:
  // (0,0) shares a cell with (0.1,0.1) but not with (-0.1,-0.1)
  std::vector<Point> pts{pt(0, 0), pt(0.1, 0.1), pt(-0.1, -0.1)};
  Graph g = build_unit_disk_graph(pts, std::vector<Fixed>(3, Fixed()));
  SquarePartition p = square_partition(g);
  CHECK(p.class_of[0] == p.class_of[1]);
  CHECK(p.class_of[0] != p.class_of[2]);
  CHECK(p.side == doctest::Approx(std::sqrt(0.5)));

  // cell indices: side is sqrt(2)/2 ~ 0.7071; x = 0.71 lands in cell 1
  CHECK(square_cell_index(0) == 0);
  CHECK(square_cell_index(710'000) == 1);
  CHECK(square_cell_index(700'000) == 0);
  CHECK(square_cell_index(-1) == -1);
  CHECK(square_cell_index(1'420'000) == 2);
}

TEST_CASE("square partition classes are cliques; neighborhoods meet <= 14") {
  Rng rng(23);
  int achieved = 0;
  for (int iter = 0; iter < 60; ++iter) {
    int n = 10 + static_cast<int>(rng.below(120));
    std::int64_t box = 1'500'000 + rng.range(0, 6'000'000);
    std::vector<Point> pts(n);
    for (auto& q : pts) q = {rng.range(0, box), rng.range(0, box)};
    Graph g = build_unit_disk_graph(pts, std::vector<Fixed>(n, Fixed()));
    SquarePartition p = square_partition(g);
    for (const auto& cls : p.classes)
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
          CHECK(g.has_edge(cls[i], cls[j]));
    int touched = max_neighborhood_classes(g, p);
    CHECK(touched <= 14);
    achieved = std::max(achieved, touched);
  }
  CHECK(achieved >= 12);  // dense boxes get close to the cap
}

TEST_CASE("packing bound values and monotonicity") {
  CHECK(packing_bound(1.0 / 1.41) == 12);
  CHECK(packing_bound(1.41 / 2.0) == 12);
  CHECK(packing_bound(0.75) == 12);
  CHECK_THROWS_AS(packing_bound(0.4), std::domain_error);
  CHECK_THROWS_AS(packing_bound(0.76), std::domain_error);
  int prev = packing_bound(0.501);
  for (double a = 0.505; a <= 0.75; a += 0.005) {
    int cur = packing_bound(a);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("close point pairs appear in every large enough ratio-bounded set") {
  // sample point sets around a center whose pairwise distance ratios lie in
  // (alpha, 1/alpha]; one point more than the packing bound forces a pair
  // closer than half the larger center distance
  Rng rng(31);
  for (double alpha : {0.55, 0.6, 0.709, 0.75}) {
    int count = packing_bound(alpha) + 1;
    for (int iter = 0; iter < 60; ++iter) {
      std::vector<double> r(count), phi(count);
      for (int i = 0; i < count; ++i) {
        r[i] = 1.0 + rng.unit() * (0.999999 / alpha - 1.0);
        phi[i] = rng.unit() * 2 * M_PI;
      }
      bool found = false;
      for (int j = 0; j < count && !found; ++j)
        for (int k = j + 1; k < count && !found; ++k) {
          double dx = r[j] * std::cos(phi[j]) - r[k] * std::cos(phi[k]);
          double dy = r[j] * std::sin(phi[j]) - r[k] * std::sin(phi[k]);
          double jk = std::hypot(dx, dy);
          if (jk < std::max(r[j], r[k]) / 2) found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("cover degree: deleting uncovered leaves first") {
  // star K_{1,3} covered by its center: all leaves drop, degree 0
  Graph st = star_graph(3);
  CHECK(cover_degree(st, {0, 1, 2}, {0}) == 0);

  // path on five vertices with cover {1, 3}: end leaves drop, degree 1
  Graph p5 = path_graph(5);
  CHECK(cover_degree(p5, {0, 1, 2, 3}, {1, 3}) == 1);

  // path on three vertices covered by the middle: degree 0
  Graph p3 = path_graph(3);
  CHECK(cover_degree(p3, {0, 1}, {1}) == 0);

  // not a cover
  CHECK_THROWS_AS(cover_degree(p3, {0, 1}, {0}), InvalidInstanceError);
}

TEST_CASE("spanning tree enumeration finds all trees of a 4-cycle") {
  GraphData d;
  d.n = 4;
  d.weights.assign(4, Fixed::from_int(1));
  d.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  Graph g(std::move(d));
  int count = 0;
  for_each_spanning_tree(g, {0, 1, 2, 3},
                         [&](const std::vector<int>&) { ++count; });
  CHECK(count == 4);
}
