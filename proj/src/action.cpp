#include "dualgraph/action.hpp"

#include <numeric>
#include <sstream>

namespace dualgraph {

namespace {

bool is_permutation_of(const std::vector<std::size_t>& map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t x : map) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

std::vector<std::size_t> compose_power(const std::vector<std::size_t>& map, long k) {
  std::vector<std::size_t> result(map.size());
  std::iota(result.begin(), result.end(), std::size_t{0});
  std::vector<std::size_t> base = map;
  // Square-and-multiply over permutation composition.
  while (k > 0) {
    if (k & 1) {
      for (auto& x : result) x = base[x];
    }
    std::vector<std::size_t> squared(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) squared[i] = base[base[i]];
    base = std::move(squared);
    k >>= 1;
  }
  return result;
}

std::vector<int> cycle_lengths(const std::vector<std::size_t>& map) {
  std::vector<int> length(map.size(), 0);
  for (std::size_t start = 0; start < map.size(); ++start) {
    if (length[start]) continue;
    int n = 1;
    for (std::size_t x = map[start]; x != start; x = map[x]) ++n;
    length[start] = n;
    for (std::size_t x = map[start]; x != start; x = map[x]) length[x] = n;
  }
  return length;
}

void check_subgroup(const CyclicAction& a, Subgroup h) {
  if (h.codegree < 1 || a.order < 1 || a.order % h.codegree != 0) {
    throw ActionError("subgroup codegree " + std::to_string(h.codegree) +
                      " does not divide the action order " + std::to_string(a.order));
  }
}

std::vector<int> orbit_sizes_under(const std::vector<std::size_t>& map, int d) {
  // The orbit of x under <sigma^d> has size len / gcd(len, d), where len is
  // the length of x's sigma-cycle.
  std::vector<int> sizes = cycle_lengths(map);
  for (int& s : sizes) s /= std::gcd(s, d);
  return sizes;
}

}  // namespace

const char* to_string(ActionLaw law) {
  switch (law) {
    case ActionLaw::kOrderPositive: return "order-positive";
    case ActionLaw::kVertexMapSize: return "vertex-map-size";
    case ActionLaw::kEdgeMapSize: return "edge-map-size";
    case ActionLaw::kVertexBijection: return "vertex-bijection";
    case ActionLaw::kEdgeBijection: return "edge-bijection";
    case ActionLaw::kCompatibility: return "compatibility";
    case ActionLaw::kOrder: return "order";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << to_string(violations[i].law);
    if (!violations[i].subject.empty()) out << " [" << violations[i].subject << "]";
    out << ": " << violations[i].detail;
  }
  return out.str();
}

ValidationReport validate(const MultiGraph& g, const CyclicAction& a) {
  ValidationReport report;
  auto fail = [&](ActionLaw law, std::string subject, std::string detail) {
    report.violations.push_back(Violation{law, std::move(subject), std::move(detail)});
  };

  if (a.order < 1) fail(ActionLaw::kOrderPositive, "", "order must be positive");

  bool vertex_ok = true;
  if (a.vertex_map.size() != g.vertex_count()) {
    fail(ActionLaw::kVertexMapSize, "", "vertex map has " + std::to_string(a.vertex_map.size()) +
                                            " entries for " + std::to_string(g.vertex_count()) +
                                            " vertices");
    vertex_ok = false;
  } else if (!is_permutation_of(a.vertex_map, g.vertex_count())) {
    fail(ActionLaw::kVertexBijection, "", "vertex map is not a bijection");
    vertex_ok = false;
  }

  bool edge_ok = true;
  if (a.edge_map.size() != g.edge_count()) {
    fail(ActionLaw::kEdgeMapSize, "", "edge map has " + std::to_string(a.edge_map.size()) +
                                          " entries for " + std::to_string(g.edge_count()) + " edges");
    edge_ok = false;
  } else if (!is_permutation_of(a.edge_map, g.edge_count())) {
    fail(ActionLaw::kEdgeBijection, "", "edge map is not a bijection");
    edge_ok = false;
  }

  if (vertex_ok && edge_ok) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& src = g.edge(e);
      const Edge& dst = g.edge(a.edge_map[e]);
      const std::size_t u = a.vertex_map[src.tail];
      const std::size_t v = a.vertex_map[src.head];
      const bool matches = (dst.tail == u && dst.head == v) || (dst.tail == v && dst.head == u);
      if (!matches) {
        fail(ActionLaw::kCompatibility, src.id,
             "image edge '" + dst.id + "' joins " + g.vertex_id(dst.tail) + "-" + g.vertex_id(dst.head) +
                 ", expected " + g.vertex_id(u) + "-" + g.vertex_id(v));
      }
    }
  }

  if (a.order >= 1) {
    if (vertex_ok) {
      const auto lengths = cycle_lengths(a.vertex_map);
      for (std::size_t v = 0; v < lengths.size(); ++v) {
        if (a.order % lengths[v] != 0) {
          fail(ActionLaw::kOrder, g.vertex_id(v),
               "vertex cycle of length " + std::to_string(lengths[v]) + " does not divide " +
                   std::to_string(a.order));
        }
      }
    }
    if (edge_ok) {
      const auto lengths = cycle_lengths(a.edge_map);
      for (std::size_t e = 0; e < lengths.size(); ++e) {
        if (a.order % lengths[e] != 0) {
          fail(ActionLaw::kOrder, g.edge(e).id,
               "edge cycle of length " + std::to_string(lengths[e]) + " does not divide " +
                   std::to_string(a.order));
        }
      }
    }
  }
  return report;
}

CyclicAction trivial_action(const MultiGraph& g) {
  CyclicAction a;
  a.order = 1;
  a.vertex_map.resize(g.vertex_count());
  a.edge_map.resize(g.edge_count());
  std::iota(a.vertex_map.begin(), a.vertex_map.end(), std::size_t{0});
  std::iota(a.edge_map.begin(), a.edge_map.end(), std::size_t{0});
  return a;
}

std::vector<std::size_t> vertex_power(const CyclicAction& a, long k) {
  return compose_power(a.vertex_map, a.order > 0 ? ((k % a.order) + a.order) % a.order : k);
}

std::vector<std::size_t> edge_power(const CyclicAction& a, long k) {
  return compose_power(a.edge_map, a.order > 0 ? ((k % a.order) + a.order) % a.order : k);
}

CyclicAction restrict_to_subgroup(const CyclicAction& a, Subgroup h) {
  check_subgroup(a, h);
  return CyclicAction{a.order / h.codegree, vertex_power(a, h.codegree), edge_power(a, h.codegree)};
}

int exact_order(const CyclicAction& a) {
  long n = 1;
  for (int len : cycle_lengths(a.vertex_map)) n = std::lcm(n, static_cast<long>(len));
  for (int len : cycle_lengths(a.edge_map)) n = std::lcm(n, static_cast<long>(len));
  return static_cast<int>(n);
}

std::vector<int> vertex_orbit_sizes(const MultiGraph& g, const CyclicAction& a, Subgroup h) {
  check_subgroup(a, h);
  (void)g;
  return orbit_sizes_under(a.vertex_map, h.codegree);
}

std::vector<int> edge_orbit_sizes(const MultiGraph& g, const CyclicAction& a, Subgroup h) {
  check_subgroup(a, h);
  (void)g;
  return orbit_sizes_under(a.edge_map, h.codegree);
}

std::vector<std::size_t> fixed_vertices(const MultiGraph& g, const CyclicAction& a, Subgroup h) {
  check_subgroup(a, h);
  const auto generator = vertex_power(a, h.codegree);
  std::vector<std::size_t> fixed;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (generator[v] == v) fixed.push_back(v);
  }
  return fixed;
}

std::vector<StabilizedEdge> stabilized_edges(const MultiGraph& g, const CyclicAction& a, Subgroup h) {
  check_subgroup(a, h);
  const auto vgen = vertex_power(a, h.codegree);
  const auto egen = edge_power(a, h.codegree);
  std::vector<StabilizedEdge> result;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (egen[e] != e) continue;
    const Edge& edge = g.edge(e);
    const bool flipped = !edge.is_loop() && vgen[edge.tail] == edge.head;
    result.push_back(StabilizedEdge{e, flipped});
  }
  return result;
}

bool acts_freely_on_vertices(const MultiGraph& g, const CyclicAction& a) {
  for (int s : vertex_orbit_sizes(g, a, Subgroup{1})) {
    if (s != a.order) return false;
  }
  return true;
}

bool acts_freely_on_edges(const MultiGraph& g, const CyclicAction& a) {
  for (int s : edge_orbit_sizes(g, a, Subgroup{1})) {
    if (s != a.order) return false;
  }
  return true;
}

GraphWithAction lift_voltage_graph(const MultiGraph& quotient, const std::vector<long>& voltages,
                                   int order) {
  if (order < 1) throw ActionError("voltage group order must be positive");
  if (voltages.size() != quotient.edge_count())
    throw ActionError("need one voltage per quotient edge");
  const std::size_t n = static_cast<std::size_t>(order);
  auto lifted_vertex = [&](std::size_t x, long j) {
    return x * n + static_cast<std::size_t>(((j % order) + order) % order);
  };

  std::vector<std::string> vertices;
  vertices.reserve(quotient.vertex_count() * n);
  for (std::size_t x = 0; x < quotient.vertex_count(); ++x) {
    for (int j = 0; j < order; ++j) vertices.push_back(quotient.vertex_id(x) + "@" + std::to_string(j));
  }
  std::vector<Edge> edges;
  edges.reserve(quotient.edge_count() * n);
  for (std::size_t e = 0; e < quotient.edge_count(); ++e) {
    const Edge& base = quotient.edge(e);
    for (int j = 0; j < order; ++j) {
      edges.push_back(Edge{base.id + "@" + std::to_string(j), lifted_vertex(base.tail, j),
                           lifted_vertex(base.head, j + voltages[e])});
    }
  }

  CyclicAction action;
  action.order = order;
  action.vertex_map.resize(vertices.size());
  action.edge_map.resize(edges.size());
  for (std::size_t x = 0; x < quotient.vertex_count(); ++x) {
    for (int j = 0; j < order; ++j) action.vertex_map[lifted_vertex(x, j)] = lifted_vertex(x, j + 1);
  }
  for (std::size_t e = 0; e < quotient.edge_count(); ++e) {
    for (int j = 0; j < order; ++j) action.edge_map[e * n + j] = e * n + static_cast<std::size_t>((j + 1) % order);
  }
  return GraphWithAction{MultiGraph(std::move(vertices), std::move(edges)), std::move(action)};
}

GraphWithAction random_voltage_lift(std::mt19937_64& rng, const RandomLiftOptions& options) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const int order = uniform(1, options.max_order);
    const int n = uniform(1, options.max_quotient_vertices);
    const int m = uniform(std::max(n - 1, 1), std::max(options.max_quotient_edges, n - 1));

    GraphBuilder builder;
    for (int x = 0; x < n; ++x) builder.add_vertex("q" + std::to_string(x));
    int edge_id = 0;
    // Random spanning tree first, so the quotient is connected.
    for (int x = 1; x < n; ++x) {
      const int parent = uniform(0, x - 1);
      builder.add_edge("t" + std::to_string(edge_id++), static_cast<std::size_t>(parent),
                       static_cast<std::size_t>(x));
    }
    while (edge_id < m) {
      builder.add_edge("t" + std::to_string(edge_id++), static_cast<std::size_t>(uniform(0, n - 1)),
                       static_cast<std::size_t>(uniform(0, n - 1)));
    }
    const MultiGraph quotient = builder.build();
    std::vector<long> voltages(quotient.edge_count());
    for (auto& v : voltages) v = uniform(0, order - 1);

    GraphWithAction lifted = lift_voltage_graph(quotient, voltages, order);
    if (is_connected(lifted.graph)) return lifted;
  }
  throw ActionError("could not sample a connected voltage lift");
}

}  // namespace dualgraph
