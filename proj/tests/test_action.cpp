#include <doctest.h>

#include <algorithm>
#include <random>

#include "dualgraph/action.hpp"
#include "dualgraph/constructions.hpp"
#include "dualgraph/invariants.hpp"
#include "fixtures.hpp"

using namespace dualgraph;
using fixtures::perm;

namespace {

CyclicAction rotation(int n, int order) {
  CyclicAction a;
  a.order = order;
  for (int i = 0; i < n; ++i) {
    a.vertex_map.push_back(std::size_t((i + 1) % n));
    a.edge_map.push_back(std::size_t((i + 1) % n));
  }
  return a;
}

bool has_law(const ValidationReport& r, ActionLaw law) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.law == law; });
}

}  // namespace

TEST_CASE("validate") {
  const MultiGraph hexagon = fixtures::cycle(6);
  CHECK(validate(hexagon, rotation(6, 6)).ok());

  const ValidationReport wrong_order = validate(hexagon, rotation(6, 4));
  CHECK_FALSE(wrong_order.ok());
  CHECK(has_law(wrong_order, ActionLaw::kOrder));

  CyclicAction bad = rotation(6, 6);
  bad.edge_map = perm({2, 3, 4, 5, 0, 1});  // c0 -> c2 is not incident to {1, 2}
  const ValidationReport incompatible = validate(hexagon, bad);
  CHECK(has_law(incompatible, ActionLaw::kCompatibility));
  CHECK(incompatible.violations.front().subject == "c0");

  CyclicAction not_bijective = rotation(6, 6);
  not_bijective.vertex_map[0] = 2;
  CHECK(has_law(validate(hexagon, not_bijective), ActionLaw::kVertexBijection));

  CyclicAction short_map = rotation(6, 6);
  short_map.edge_map.pop_back();
  CHECK(has_law(validate(hexagon, short_map), ActionLaw::kEdgeMapSize));
}

TEST_CASE("vertex orbit sizes") {
  for (int n = 2; n <= 9; ++n) {
    const auto model = cycle_model(n);
    for (int s : vertex_orbit_sizes(model.graph, model.action, Subgroup{1})) CHECK(s == n);
    for (int s : vertex_orbit_sizes(model.graph, model.action, Subgroup{n})) CHECK(s == 1);
  }
  const auto k33 = mobius_ladder(4);
  for (int s : vertex_orbit_sizes(k33.graph, k33.action, Subgroup{3})) CHECK(s == 2);
  CHECK_THROWS_AS(vertex_orbit_sizes(k33.graph, k33.action, Subgroup{4}), ActionError);
}

TEST_CASE("orbit sizes agree with naive iteration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto lifted = random_voltage_lift(rng);
    for (int d : divisors(lifted.action.order)) {
      const auto sizes = vertex_orbit_sizes(lifted.graph, lifted.action, Subgroup{d});
      for (std::size_t v = 0; v < sizes.size(); ++v) {
        CHECK(sizes[v] == fixtures::naive_orbit_size(lifted.action.vertex_map, v, d));
        CHECK((lifted.action.order / d) % sizes[v] == 0);
      }
    }
  }
}

TEST_CASE("fixed vertices") {
  const auto hanger = coathanger_chain(2);
  CHECK(fixed_vertices(hanger.graph, hanger.action, Subgroup{1}).size() == hanger.graph.vertex_count());

  const auto two_cycle = cycle_model(2);
  CHECK(fixed_vertices(two_cycle.graph, two_cycle.action, Subgroup{1}).empty());
  CHECK(fixed_vertices(two_cycle.graph, two_cycle.action, Subgroup{2}).size() == 2);

  const auto ladder = mobius_ladder(6);
  CHECK(fixed_vertices(ladder.graph, ladder.action, Subgroup{10}).size() == 10);
}

TEST_CASE("stabilized edges") {
  SUBCASE("single edge with endpoint swap") {
    const auto edge = cayley_graph(GeneratingSet{2, {1}});
    const auto stab = stabilized_edges(edge.graph, edge.action, Subgroup{1});
    REQUIRE(stab.size() == 1);
    CHECK(stab[0].flipped);
  }
  SUBCASE("2-cycle exchanges its parallel edges") {
    const auto two_cycle = cycle_model(2);
    CHECK(stabilized_edges(two_cycle.graph, two_cycle.action, Subgroup{1}).empty());
  }
  SUBCASE("antipodal rotation flips every rung of a Moebius ladder") {
    for (int g = 2; g <= 9; ++g) {
      const auto ladder = mobius_ladder(g);
      const auto stab = stabilized_edges(ladder.graph, ladder.action, Subgroup{g - 1});
      std::size_t rungs = 0;
      for (const auto& s : stab) {
        if (ladder.graph.edge(s.edge).id[0] == 'r') {
          ++rungs;
          CHECK(s.flipped);
        }
      }
      CHECK(rungs == std::size_t(g - 1));
    }
  }
  SUBCASE("loops at fixed vertices are reported unflipped") {
    const MultiGraph g({"v", "w"}, {Edge{"l", 0, 0}, Edge{"vw", 0, 1}});
    const auto stab = stabilized_edges(g, CyclicAction{1, perm({0, 1}), perm({0, 1})}, Subgroup{1});
    REQUIRE(stab.size() == 2);
    CHECK_FALSE(stab[0].flipped);
    CHECK_FALSE(stab[1].flipped);
  }
}

TEST_CASE("subgroup and stabilizer properties over random and handcrafted actions") {
  std::vector<GraphWithAction> cases;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) cases.push_back(random_voltage_lift(rng));
  for (auto& [name, m] : fixtures::handcrafted_models()) cases.push_back({m.graph, m.action});
  for (int g = 0; g <= 8; ++g)
    for (int index = 1; index <= std::max(2, std::abs(2 * g - 2)); ++index)
      if (admissible(g, index)) {
        auto m = construct(g, index);
        cases.push_back({m.graph, m.action});
      }

  for (const auto& [g, a] : cases) {
    REQUIRE(validate(g, a).ok());
    const auto ds = divisors(a.order);
    for (int d : ds) {
      const auto fixed = fixed_vertices(g, a, Subgroup{d});
      for (int d2 : ds) {
        if (d2 % d != 0) continue;
        const auto bigger = fixed_vertices(g, a, Subgroup{d2});
        CHECK(std::includes(bigger.begin(), bigger.end(), fixed.begin(), fixed.end()));
      }
      const auto vgen = vertex_power(a, d);
      for (const auto& s : stabilized_edges(g, a, Subgroup{d})) {
        const Edge& e = g.edge(s.edge);
        if (s.flipped) {
          CHECK(vgen[e.tail] == e.head);
          CHECK(vgen[e.head] == e.tail);
        } else {
          CHECK(std::binary_search(fixed.begin(), fixed.end(), e.tail));
          CHECK(std::binary_search(fixed.begin(), fixed.end(), e.head));
        }
      }
    }
  }
}

TEST_CASE("voltage lifts") {
  SUBCASE("loop with voltage 1 unrolls to a cycle") {
    const auto lifted = lift_voltage_graph(fixtures::loop_graph(), {1}, 6);
    CHECK(validate(lifted.graph, lifted.action).ok());
    CHECK(are_isomorphic(lifted.graph, fixtures::cycle(6)));
    CHECK(acts_freely_on_vertices(lifted.graph, lifted.action));
    CHECK(lifted.action.vertex_map[lifted.graph.find_vertex("v@5").value()] == lifted.graph.find_vertex("v@0").value());
  }
  SUBCASE("loop with voltage 0 gives disjoint loops") {
    const auto lifted = lift_voltage_graph(fixtures::loop_graph(), {0}, 3);
    CHECK(lifted.graph.vertex_count() == 3);
    CHECK(lifted.graph.edge_count() == 3);
    CHECK_FALSE(is_connected(lifted.graph));
    CHECK(validate(lifted.graph, lifted.action).ok());
  }
  SUBCASE("edge with voltage 0, I = 2") {
    const auto lifted = lift_voltage_graph(fixtures::path(1), {0}, 2);
    CHECK(lifted.graph.vertex_count() == 4);
    CHECK(lifted.graph.edge_count() == 2);
    CHECK_FALSE(is_connected(lifted.graph));
    CHECK(validate(lifted.graph, lifted.action).ok());
    CHECK(lifted.action.edge_map == perm({1, 0}));
  }
  SUBCASE("random lifts are valid, connected and vertex-free") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto lifted = random_voltage_lift(rng);
      CHECK(validate(lifted.graph, lifted.action).ok());
      CHECK(is_connected(lifted.graph));
      CHECK(acts_freely_on_vertices(lifted.graph, lifted.action));
    }
  }
}

TEST_CASE("restriction and exact order") {
  const auto ladder = mobius_ladder(7);
  CHECK(exact_order(ladder.action) == 12);
  const auto restricted = restrict_to_subgroup(ladder.action, Subgroup{4});
  CHECK(restricted.order == 3);
  CHECK(exact_order(restricted) == 3);
  CHECK(validate(ladder.graph, restricted).ok());
  CHECK_THROWS_AS(restrict_to_subgroup(ladder.action, Subgroup{5}), ActionError);
}
