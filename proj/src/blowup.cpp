#include "dualgraph/blowup.hpp"

namespace dualgraph {

BlownUpModel base_change(const CurveModel& m, ExtensionSpec x) {
  if (x.d < 1 || m.order() % x.d != 0)
    throw InvariantError("residue degree d = " + std::to_string(x.d) + " does not divide I = " +
                         std::to_string(m.order()));
  if (x.e < 1) throw InvariantError("ramification index must be positive");

  const CyclicAction generator = restrict_to_subgroup(m.action, Subgroup{x.d});
  const MultiGraph& g = m.graph;
  Subdivision sub = subdivide(g, x.e);
  const int e = x.e;

  CyclicAction moved;
  moved.order = generator.order;
  moved.vertex_map.resize(sub.graph.vertex_count());
  moved.edge_map.resize(sub.graph.edge_count());

  for (std::size_t v = 0; v < g.vertex_count(); ++v) moved.vertex_map[v] = generator.vertex_map[v];

  for (std::size_t edge = 0; edge < g.edge_count(); ++edge) {
    const std::size_t image = generator.edge_map[edge];
    // The chain keeps its direction iff the image of the tail is the tail of
    // the image edge.
    const bool reversed = generator.vertex_map[g.edge(edge).tail] != g.edge(image).tail;
    for (int p = 1; p < e; ++p) {
      moved.vertex_map[sub.chain_vertex(g, edge, p)] = sub.chain_vertex(g, image, reversed ? e - p : p);
    }
    for (int k = 0; k < e; ++k) {
      moved.edge_map[sub.chain_segment(edge, k)] = sub.chain_segment(image, reversed ? e - 1 - k : k);
    }
  }
  return BlownUpModel{std::move(sub.graph), std::move(moved), std::move(sub.provenance)};
}

bool oracle_splits(const CurveModel& m, ExtensionSpec x) {
  const BlownUpModel blown = base_change(m, x);
  for (std::size_t v = 0; v < blown.action.vertex_map.size(); ++v) {
    if (blown.action.vertex_map[v] == v) return true;
  }
  return false;
}

}  // namespace dualgraph
