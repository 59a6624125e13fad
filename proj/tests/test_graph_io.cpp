#include <doctest.h>

#include <sstream>
#include <string>

#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_io.hpp"

using namespace domgame;

namespace {

// Straight reading of the graph6 definition, for n < 63.
Graph decode_small(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("graph6 known strings") {
  CHECK(emit_graph6(gen_complete(2)) == "A_");
  CHECK(emit_graph6(gen_complete(3)) == "Bw");
  CHECK(emit_graph6(gen_complete(4)) == "C~");
  CHECK(parse_graph6("Bg") == gen_path(3));
  CHECK(canonical_code(parse_graph6("IheA@GUAo")) == canonical_code(gen_petersen()));
  CHECK(parse_graph6(">>graph6<<C~\n") == gen_complete(4));
}

TEST_CASE("graph6 agrees with a direct decoder") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const auto text = emit_graph6(g);
      CHECK(decode_small(text) == g);
      CHECK(parse_graph6(text) == g);
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_isolate_free(40, 0.2, seed);
    CHECK(decode_small(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 long form") {
  const Graph g = gen_cycle(70);
  const auto text = emit_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("graph6 errors carry the offset") {
  try {
    parse_graph6("C~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("C ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_graph6("E"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("edge lists") {
  std::istringstream in("# a path\n3 2\n0 1\n1 2  # tail comment\n");
  CHECK(read_edge_list(in) == gen_path(3));
  std::istringstream back(write_edge_list(gen_cycle(5)));
  CHECK(read_edge_list(back) == gen_cycle(5));
  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_list), GraphError);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), GraphError);
}

TEST_CASE("generator specs") {
  CHECK(generate("cycle:8").graph == gen_cycle(8));
  CHECK(generate("union:cycle:4+cycle:8").graph == disjoint_union(gen_cycle(4), gen_cycle(8)));
  CHECK(generate("g6:C~").graph == gen_complete(4));
  CHECK(generate("random:9:0.3:4").graph == gen_random_isolate_free(9, 0.3, 4));
  auto sub = generate("subdiv2:complete:4");
  CHECK(sub.graph.order() == 16);
  REQUIRE(sub.subdivision.has_value());
  CHECK(sub.subdivision->base == gen_complete(4));
  CHECK_FALSE(generate("petersen").subdivision.has_value());
  CHECK_THROWS_AS(generate("wheel:5"), GraphError);
  CHECK_THROWS_AS(generate("cycle:x"), GraphError);
}
