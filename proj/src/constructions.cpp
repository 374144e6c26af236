#include "dualgraph/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dualgraph {

CurveModel make_model(GraphWithAction graph_with_action, std::optional<Claim> claimed) {
  const std::size_t n = graph_with_action.graph.vertex_count();
  return CurveModel{std::move(graph_with_action.graph), std::move(graph_with_action.action),
                    std::vector<ComponentData>(n), claimed};
}

std::string model_problem(const CurveModel& m) {
  const ValidationReport report = validate(m.graph, m.action);
  if (!report.ok()) return "invalid action: " + report.summary();
  if (!is_connected(m.graph)) return "graph is not connected";
  if (m.components.size() != m.graph.vertex_count()) return "component table does not match vertex count";
  for (std::size_t v = 0; v < m.components.size(); ++v) {
    if (m.components[v].ns_index < 1 || m.components[v].multiplicity < 1)
      return "component '" + m.graph.vertex_id(v) + "' needs positive ns_index and multiplicity";
  }
  return {};
}

void require_valid(const CurveModel& m) {
  if (auto problem = model_problem(m); !problem.empty()) throw ModelError(problem);
}

std::string generating_set_problem(const GeneratingSet& gs) {
  if (gs.order < 1) return "group order must be positive";
  long span = gs.order;
  std::set<int> members;
  for (int s : gs.residues) {
    if (s < 0 || s >= gs.order) return "residue " + std::to_string(s) + " is not reduced mod " + std::to_string(gs.order);
    if (s == 0) return "generating set contains the identity";
    members.insert(s);
    span = std::gcd(span, static_cast<long>(s));
  }
  for (int s : members) {
    if (!members.count((gs.order - s) % gs.order))
      return "generating set is not symmetric: missing inverse of " + std::to_string(s);
  }
  if (span != 1) return "residues do not generate Z/" + std::to_string(gs.order);
  return {};
}

GraphWithAction cayley_graph(const GeneratingSet& gs) {
  if (auto problem = generating_set_problem(gs); !problem.empty()) throw ConstructionError(problem);
  const int n = gs.order;
  const std::set<int> members(gs.residues.begin(), gs.residues.end());

  GraphBuilder builder;
  for (int x = 0; x < n; ++x) builder.add_vertex(std::to_string(x));

  std::vector<std::size_t> edge_map;
  for (int s : members) {
    if (s > n - s) continue;  // handled by its inverse
    const std::string prefix = "s" + std::to_string(s) + ":";
    const std::size_t first = edge_map.size();
    if (2 * s == n) {
      // Involution: one edge per antipodal pair; the wraparound image flips.
      for (int x = 0; x < s; ++x) {
        builder.add_edge(prefix + std::to_string(x), static_cast<std::size_t>(x), static_cast<std::size_t>(x + s));
        edge_map.push_back(first + static_cast<std::size_t>((x + 1) % s));
      }
    } else {
      for (int x = 0; x < n; ++x) {
        builder.add_edge(prefix + std::to_string(x), static_cast<std::size_t>(x),
                         static_cast<std::size_t>((x + s) % n));
        edge_map.push_back(first + static_cast<std::size_t>((x + 1) % n));
      }
    }
  }

  CyclicAction action;
  action.order = n;
  action.vertex_map.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) action.vertex_map[x] = static_cast<std::size_t>((x + 1) % n);
  action.edge_map = std::move(edge_map);
  return GraphWithAction{builder.build(), std::move(action)};
}

GraphWithAction mobius_ladder(int genus) {
  if (genus < 2) throw ConstructionError("Moebius ladder needs genus >= 2");
  const int n = 2 * genus - 2;
  const int rungs = genus - 1;

  GraphBuilder builder;
  for (int i = 0; i < n; ++i) builder.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    builder.add_edge("c" + std::to_string(i), static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
  for (int i = 0; i < rungs; ++i)
    builder.add_edge("r" + std::to_string(i), static_cast<std::size_t>(i), static_cast<std::size_t>(i + rungs));

  CyclicAction action;
  action.order = n;
  action.vertex_map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) action.vertex_map[i] = static_cast<std::size_t>((i + 1) % n);
  for (int i = 0; i < n; ++i) action.edge_map.push_back(static_cast<std::size_t>((i + 1) % n));
  // rung_{g-2} = {g-2, 2g-3} goes to {g-1, 0} = rung_0, reversed.
  for (int i = 0; i < rungs; ++i) action.edge_map.push_back(static_cast<std::size_t>(n + (i + 1) % rungs));
  return GraphWithAction{builder.build(), std::move(action)};
}

GraphWithAction cycle_model(int order) {
  if (order < 2) throw ConstructionError("cycle model needs I >= 2");
  GraphBuilder builder;
  for (int i = 0; i < order; ++i) builder.add_vertex(std::to_string(i));
  for (int i = 0; i < order; ++i)
    builder.add_edge("c" + std::to_string(i), static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % order));

  CyclicAction action;
  action.order = order;
  for (int i = 0; i < order; ++i) {
    action.vertex_map.push_back(static_cast<std::size_t>((i + 1) % order));
    action.edge_map.push_back(static_cast<std::size_t>((i + 1) % order));
  }
  return GraphWithAction{builder.build(), std::move(action)};
}

GraphWithAction coathanger_chain(int genus) {
  if (genus < 0) throw ConstructionError("genus must be non-negative");
  GraphBuilder builder;
  if (genus == 0) {
    builder.add_vertex("0");
  } else {
    for (int h = 0; h < genus; ++h) {
      const std::string p = "h" + std::to_string(h) + ".";
      for (int k = 0; k < 4; ++k) builder.add_vertex(p + std::to_string(k));
      builder.add_edge(p + "01", p + "0", p + "1");
      builder.add_edge(p + "02", p + "0", p + "2");
      builder.add_edge(p + "03", p + "0", p + "3");
      builder.add_edge(p + "23", p + "2", p + "3");
    }
    for (int h = 0; h + 1 < genus; ++h) {
      builder.add_edge("b" + std::to_string(h), "h" + std::to_string(h) + ".1", "h" + std::to_string(h + 1) + ".1");
    }
  }
  MultiGraph graph = builder.build();
  CyclicAction action = trivial_action(graph);
  return GraphWithAction{std::move(graph), std::move(action)};
}

bool admissible(long genus, long index) {
  if (genus < 0 || index < 1) return false;
  return (2 * genus - 2) % index == 0;
}

CurveModel construct(int genus, int index) {
  if (!admissible(genus, index)) {
    throw ConstructionError("no model for genus " + std::to_string(genus) + " and index " + std::to_string(index) +
                            ": the index must divide 2g-2 = " + std::to_string(2L * genus - 2));
  }
  const Claim claim{genus, index};
  if (index == 1) return make_model(coathanger_chain(genus), claim);
  if (genus == 0) return make_model(cayley_graph(GeneratingSet{2, {1}}), claim);
  if (genus == 1) return make_model(cycle_model(index), claim);

  GraphWithAction ladder = mobius_ladder(genus);
  const int full = 2 * genus - 2;
  if (index < full) {
    // G_I embeds in G_{2g-2} via sigma -> sigma^{(2g-2)/I}.
    ladder.action = restrict_to_subgroup(ladder.action, Subgroup{full / index});
  }
  return make_model(std::move(ladder), claim);
}

bool RealizabilityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RealizabilityCheck& c) { return c.passed; });
}

namespace {

long saturating_pow(long base, int exponent) {
  constexpr long kCap = 1L << 40;
  long result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
    if (result >= kCap) return kCap;
  }
  return result;
}

}  // namespace

RealizabilityReport check_realizability(const CurveModel& m, ResidueCardinality q, RealizabilityMode mode) {
  RealizabilityReport report;
  const MultiGraph& g = m.graph;

  report.checks.push_back({"connected", is_connected(g), ""});

  const int top = max_degree(g);
  report.checks.push_back({"max-degree<=3", top <= 3, "max degree " + std::to_string(top)});

  if (!q) {
    report.checks.push_back({"non-nodal-points", true, "infinite residue field"});
    return report;
  }
  const long card = *q;
  if (mode == RealizabilityMode::kFull) {
    const auto sizes = vertex_orbit_sizes(g, m.action, Subgroup{1});
    std::string offenders;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) > saturating_pow(card, sizes[v])) {
        if (!offenders.empty()) offenders += ",";
        offenders += g.vertex_id(v);
      }
    }
    report.checks.push_back({"non-nodal-points(full)", offenders.empty(),
                             offenders.empty() ? "every vertex has degree <= q^{orbit size}"
                                               : "degree exceeds q^{orbit size} at " + offenders});
  } else {
    std::optional<std::size_t> witness;
    for (std::size_t v : fixed_vertices(g, m.action, Subgroup{1})) {
      if (g.degree(v) <= card) {
        witness = v;
        break;
      }
    }
    report.checks.push_back({"non-nodal-points(weak)", witness.has_value(),
                             witness ? "fixed vertex " + g.vertex_id(*witness) + " has degree <= q"
                                     : "no fixed vertex of degree <= q"});
  }
  return report;
}

}  // namespace dualgraph
