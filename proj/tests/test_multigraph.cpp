#include <doctest.h>

#include <numeric>
#include <random>

#include "dualgraph/constructions.hpp"
#include "dualgraph/multigraph.hpp"
#include "fixtures.hpp"

using namespace dualgraph;

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(MultiGraph({}, {}), GraphError);
  CHECK_THROWS_AS(MultiGraph({"a", "a"}, {}), GraphError);
  CHECK_THROWS_AS(MultiGraph({"a"}, {Edge{"e", 0, 1}}), GraphError);
  CHECK_THROWS_AS(MultiGraph({"a", "b"}, {Edge{"e", 0, 1}, Edge{"e", 1, 0}}), GraphError);
  GraphBuilder b;
  b.add_vertex("x");
  CHECK_THROWS_AS(b.add_edge("e", "x", "nope"), GraphError);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(mobius_ladder(5).graph) == -4);
  CHECK(euler_characteristic(fixtures::single_vertex()) == 1);
  CHECK(euler_characteristic(fixtures::cycle(6)) == 0);
}

TEST_CASE("arithmetic genus") {
  CHECK(arithmetic_genus(fixtures::single_vertex()) == 0);
  CHECK(arithmetic_genus(coathanger_chain(1).graph) == 1);
  CHECK(arithmetic_genus(fixtures::complete_bipartite(3, 3)) == 4);
  CHECK_THROWS_AS(arithmetic_genus(MultiGraph({"a", "b"}, {})), GraphError);
}

TEST_CASE("degree counts loops twice") {
  const MultiGraph hanger = coathanger_chain(1).graph;
  CHECK(hanger.degree("h0.0") == 3);
  CHECK(fixtures::single_vertex().degree("v") == 0);
  CHECK(fixtures::loop_graph().degree("v") == 2);
  CHECK_THROWS_AS(hanger.degree("missing"), GraphError);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(MultiGraph({"a", "b"}, {})));
  for (int n = 1; n <= 7; ++n) CHECK(is_connected(fixtures::cycle(n)));
  for (int g = 2; g <= 12; ++g) CHECK(is_connected(mobius_ladder(g).graph));
  CHECK(is_connected(fixtures::single_vertex()));
}

TEST_CASE("subdivision") {
  SUBCASE("single edge into three segments") {
    const Subdivision s = subdivide(fixtures::path(1), 3);
    CHECK(s.graph.vertex_count() == 4);
    CHECK(s.graph.edge_count() == 3);
    CHECK(fixtures::brute_force_isomorphic(s.graph, fixtures::path(3)));
    CHECK(s.provenance[2] == ChainPosition{0, 1});
    CHECK(s.provenance[3] == ChainPosition{0, 2});
    CHECK(s.graph.vertex_id(2) == "p0/1");
  }
  SUBCASE("2-cycle doubled is a 4-cycle") {
    const Subdivision s = subdivide(cycle_model(2).graph, 2);
    CHECK(fixtures::brute_force_isomorphic(s.graph, fixtures::cycle(4)));
  }
  SUBCASE("e = 1 is a copy and e = 0 is rejected") {
    const MultiGraph g = mobius_ladder(3).graph;
    CHECK(subdivide(g, 1).graph == g);
    CHECK_THROWS_AS(subdivide(g, 0), GraphError);
  }
  SUBCASE("positions count from the tail") {
    const MultiGraph g({"a", "b"}, {Edge{"x", 1, 0}});
    const Subdivision s = subdivide(g, 4);
    CHECK(s.chain_vertex(g, 0, 0) == 1);
    CHECK(s.chain_vertex(g, 0, 4) == 0);
    CHECK(s.graph.edge(s.chain_segment(0, 0)).tail == 1);
    CHECK(s.graph.edge(s.chain_segment(0, 3)).head == 0);
  }
}

TEST_CASE("subdivision preserves chi, genus and connectivity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = random_voltage_lift(rng).graph;
    for (int e = 1; e <= 5; ++e) {
      const Subdivision s = subdivide(g, e);
      CHECK(euler_characteristic(s.graph) == euler_characteristic(g));
      CHECK(arithmetic_genus(s.graph) == arithmetic_genus(g));
      CHECK(s.graph.vertex_count() == g.vertex_count() + g.edge_count() * std::size_t(e - 1));
    }
  }
}

TEST_CASE("handshake: degrees sum to twice the edge count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = random_voltage_lift(rng).graph;
    int total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * int(g.edge_count()));
  }
}

TEST_CASE("isomorphism on named graphs") {
  CHECK(are_isomorphic(mobius_ladder(4).graph, fixtures::complete_bipartite(3, 3)));
  CHECK_FALSE(are_isomorphic(fixtures::cycle(3), fixtures::path(3)));
  CHECK(are_isomorphic(mobius_ladder(3).graph, fixtures::complete_graph(4)));
  CHECK_FALSE(are_isomorphic(mobius_ladder(5).graph, fixtures::cycle(8)));
  // Loops and multiplicities matter.
  const MultiGraph theta({"a", "b"}, {Edge{"1", 0, 1}, Edge{"2", 0, 1}, Edge{"3", 0, 1}});
  const MultiGraph dumbbell({"a", "b"}, {Edge{"1", 0, 0}, Edge{"2", 0, 1}, Edge{"3", 1, 1}});
  CHECK(are_isomorphic(mobius_ladder(2).graph, theta));
  CHECK_FALSE(are_isomorphic(theta, dumbbell));
}

TEST_CASE("isomorphism agrees with brute force and is reflexive and symmetric") {
  std::vector<MultiGraph> set{fixtures::cycle(4), fixtures::path(3), fixtures::complete_graph(4),
                              fixtures::complete_bipartite(2, 3), mobius_ladder(3).graph, mobius_ladder(4).graph,
                              coathanger_chain(1).graph, fixtures::complete_bipartite(3, 3), cycle_model(2).graph,
                              subdivide(fixtures::cycle(3), 2).graph, fixtures::cycle(6), fixtures::loop_graph()};
  // Relabel K4 to make the match non-trivial.
  set.push_back(MultiGraph({"p", "q", "r", "s"}, {Edge{"a", 3, 1}, Edge{"b", 2, 0}, Edge{"c", 1, 0}, Edge{"d", 3, 2},
                                                  Edge{"e", 0, 3}, Edge{"f", 2, 1}}));
  for (const auto& a : set) {
    CHECK(are_isomorphic(a, a));
    for (const auto& b : set) {
      const bool fast = are_isomorphic(a, b);
      CHECK(fast == are_isomorphic(b, a));
      CHECK(fast == fixtures::brute_force_isomorphic(a, b));
    }
  }
}
