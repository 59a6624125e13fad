#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "domgame/errors.hpp"
#include "domgame/graph.hpp"

using namespace domgame;

TEST_CASE("edge list construction sorts and merges") {
  const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_edge_list(3, edges);
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 2});
  CHECK(g.adjacent(2, 1));
  CHECK(g.closed_neighborhood(1) == std::vector<Vertex>{0, 1, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("bad edges are rejected") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edge_list(3, loop), GraphError);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edge_list(3, out_of_range), GraphError);
  const std::vector<Edge> negative{{-1, 0}};
  CHECK_THROWS_AS(Graph::from_edge_list(3, negative), GraphError);
  CHECK_THROWS_AS(gen_cycle(2), GraphError);
}

TEST_CASE("generators") {
  CHECK(gen_cycle(5).size() == 5);
  CHECK(gen_path(5).size() == 4);
  CHECK(gen_complete(5).size() == 10);
  const Graph p = gen_petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(gen_path(4).min_degree() == 1);
}

TEST_CASE("components and unions") {
  const Graph g = disjoint_union(gen_cycle(4), gen_path(3));
  CHECK(g.order() == 7);
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(comps[1] == std::vector<Vertex>{4, 5, 6});
  CHECK(component_ids(g) == std::vector<int>{0, 0, 0, 0, 1, 1, 1});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(gen_petersen()));
}

TEST_CASE("random isolate-free graphs are reproducible") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph a = gen_random_isolate_free(9, 0.1, seed);
    CHECK_FALSE(a.has_isolated_vertex());
    CHECK(a == gen_random_isolate_free(9, 0.1, seed));
  }
}

TEST_CASE("relabel and induced subgraph") {
  const Graph p = gen_path(4);  // 0-1-2-3
  const std::vector<Vertex> perm{3, 2, 1, 0};
  CHECK(relabel(p, perm) == p);
  const std::vector<Vertex> keep{1, 2, 3};
  const Graph sub = induced_subgraph(p, keep);
  CHECK(sub == gen_path(3));
}

TEST_CASE("three-fold subdivision") {
  auto [g, map] = subdivide3(gen_cycle(3));
  CHECK(g.order() == 9);
  CHECK(g.size() == 9);
  CHECK(is_connected(g));
  for (Vertex v = 0; v < 9; ++v) CHECK(g.degree(v) == 2);
  REQUIRE(map.paths.size() == 3);
  for (const auto& p : map.paths) {
    CHECK(g.adjacent(p.w, p.x));
    CHECK(g.adjacent(p.x, p.y));
    CHECK(g.adjacent(p.y, p.z));
    CHECK_FALSE(map.is_base_vertex(p.x));
    CHECK(map.is_base_vertex(p.w));
    CHECK(&map.paths[map.path_of(p.y)] == &p);
  }
  auto [k4, kmap] = subdivide3(gen_complete(4));
  CHECK(k4.order() == 16);
  CHECK(kmap.base == gen_complete(4));
}
