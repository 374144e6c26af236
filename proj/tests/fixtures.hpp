// Test-only graphs, models and brute-force reference computations. Nothing
// here calls into the code paths it is used to check.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dualgraph/action.hpp"
#include "dualgraph/constructions.hpp"
#include "dualgraph/model.hpp"
#include "dualgraph/multigraph.hpp"

namespace fixtures {

using namespace dualgraph;

inline MultiGraph single_vertex() { return MultiGraph({"v"}, {}); }

inline MultiGraph loop_graph() { return MultiGraph({"v"}, {Edge{"l", 0, 0}}); }

inline MultiGraph path(int edges) {
  GraphBuilder b;
  for (int i = 0; i <= edges; ++i) b.add_vertex(std::to_string(i));
  for (int i = 0; i < edges; ++i) b.add_edge("p" + std::to_string(i), std::size_t(i), std::size_t(i + 1));
  return b.build();
}

inline MultiGraph cycle(int n) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge("c" + std::to_string(i), std::size_t(i), std::size_t((i + 1) % n));
  return b.build();
}

inline MultiGraph complete_graph(int n) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(std::to_string(i) + "-" + std::to_string(j), std::size_t(i), std::size_t(j));
  return b.build();
}

inline MultiGraph complete_bipartite(int p, int q) {
  GraphBuilder b;
  for (int i = 0; i < p + q; ++i) b.add_vertex(std::to_string(i));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) b.add_edge(std::to_string(i) + "-" + std::to_string(p + j), std::size_t(i), std::size_t(p + j));
  return b.build();
}

inline std::vector<std::size_t> perm(std::initializer_list<std::size_t> xs) { return xs; }

// Naive orbit size of x under the map iterated `step` times per move.
inline int naive_orbit_size(const std::vector<std::size_t>& map, std::size_t x, int step) {
  auto apply = [&](std::size_t y) {
    for (int i = 0; i < step; ++i) y = map[y];
    return y;
  };
  int n = 1;
  for (std::size_t y = apply(x); y != x; y = apply(y)) ++n;
  return n;
}

// Isomorphism by trying every vertex permutation. Only for tiny graphs.
inline bool brute_force_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto matrix = [n](const MultiGraph& g) {
    std::vector<int> m(n * n, 0);
    for (const Edge& e : g.edges()) {
      ++m[e.tail * n + e.head];
      if (e.tail != e.head) ++m[e.head * n + e.tail];
    }
    return m;
  };
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i)
      for (std::size_t j = 0; j < n && same; ++j) same = ma[i * n + j] == mb[p[i] * n + p[j]];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Hand-built models whose actions fix vertices, so that the classifier and
// the oracle are exercised beyond free actions.
inline std::vector<std::pair<std::string, CurveModel>> handcrafted_models() {
  std::vector<std::pair<std::string, CurveModel>> out;

  {  // path a-b-c reflected through b
    MultiGraph g = path(2);
    out.emplace_back("path-reflection", make_model({g, CyclicAction{2, perm({2, 1, 0}), perm({1, 0})}}));
  }
  {  // star with three leaves rotated
    MultiGraph g({"c", "x", "y", "z"}, {Edge{"cx", 0, 1}, Edge{"cy", 0, 2}, Edge{"zc", 3, 0}});
    out.emplace_back("star-rotation", make_model({g, CyclicAction{3, perm({0, 2, 3, 1}), perm({1, 2, 0})}}));
  }
  {  // loop at a vertex, trivial-on-vertex order 2
    MultiGraph g({"v", "w"}, {Edge{"l", 0, 0}, Edge{"vw", 0, 1}});
    out.emplace_back("loop-fixed", make_model({g, CyclicAction{2, perm({0, 1}), perm({0, 1})}}));
  }
  {  // two looped vertices swapped, joining edge flipped
    MultiGraph g({"a", "b"}, {Edge{"la", 0, 0}, Edge{"lb", 1, 1}, Edge{"ab", 0, 1}});
    out.emplace_back("twin-loops-swap", make_model({g, CyclicAction{2, perm({1, 0}), perm({1, 0, 2})}}));
  }
  {  // triangle reflected through vertex 0
    MultiGraph g({"0", "1", "2"}, {Edge{"01", 0, 1}, Edge{"12", 1, 2}, Edge{"20", 2, 0}});
    out.emplace_back("triangle-reflection", make_model({g, CyclicAction{2, perm({0, 2, 1}), perm({2, 1, 0})}}));
  }
  {  // 4-cycle reflected across an edge-midpoint axis: 0<->1, 2<->3
    MultiGraph g = cycle(4);
    out.emplace_back("square-edge-reflection", make_model({g, CyclicAction{2, perm({1, 0, 3, 2}), perm({0, 3, 2, 1})}}));
  }
  {  // theta graph: 2 vertices, 4 parallel edges, order 4 with mixed tails
    MultiGraph g({"a", "b"}, {Edge{"e0", 0, 1}, Edge{"e1", 1, 0}, Edge{"e2", 0, 1}, Edge{"e3", 0, 1}});
    out.emplace_back("theta4-rotation", make_model({g, CyclicAction{4, perm({1, 0}), perm({1, 2, 3, 0})}}));
  }
  {  // theta graph, order 2: vertices swapped, parallel edges each flipped
    MultiGraph g({"a", "b"}, {Edge{"e0", 0, 1}, Edge{"e1", 1, 0}, Edge{"e2", 0, 1}});
    out.emplace_back("theta3-flip", make_model({g, CyclicAction{2, perm({1, 0}), perm({0, 1, 2})}}));
  }
  {  // six spokes rotated around a fixed hub (degree 6, so not realizable)
    GraphBuilder b;
    b.add_vertex("hub");
    for (int i = 0; i < 6; ++i) b.add_vertex("r" + std::to_string(i));
    for (int i = 0; i < 6; ++i) b.add_edge("s" + std::to_string(i), std::size_t(0), std::size_t(1 + i));
    MultiGraph g = b.build();
    out.emplace_back("star6-rotation", make_model({g, CyclicAction{6, perm({0, 2, 3, 4, 5, 6, 1}), perm({1, 2, 3, 4, 5, 0})}}));
  }
  {  // single edge with swapped endpoints, order 4 acting through a quotient
    MultiGraph g({"a", "b"}, {Edge{"ab", 0, 1}});
    out.emplace_back("edge-swap-order4", make_model({g, CyclicAction{4, perm({1, 0}), perm({0})}}));
  }
  return out;
}

// Voltage lift with an extra fixed apex joined to every vertex of the orbit
// of vertex 0, giving a model whose action has a fixed vertex.
inline CurveModel lift_with_apex(const GraphWithAction& lifted) {
  const MultiGraph& g = lifted.graph;
  std::vector<std::string> vertices = g.vertex_ids();
  std::vector<Edge> edges = g.edges();
  const std::size_t apex = vertices.size();
  vertices.push_back("apex");
  CyclicAction a = lifted.action;
  a.vertex_map.push_back(apex);
  std::vector<std::size_t> orbit{0};
  for (std::size_t v = a.vertex_map[0]; v != 0; v = a.vertex_map[v]) orbit.push_back(v);
  const std::size_t first = edges.size();
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    edges.push_back(Edge{"spoke" + std::to_string(k), apex, orbit[k]});
    a.edge_map.push_back(first + (k + 1) % orbit.size());
  }
  return make_model({MultiGraph(std::move(vertices), std::move(edges)), std::move(a)});
}

}  // namespace fixtures
