// Brute-force splitting oracle. A totally ramified base change of degree e
// turns each node into a chain of e-1 rational curves once the model is made
// regular again; combinatorially, every edge of the dual graph is subdivided
// into e segments and the Galois action is transported to the chains. The
// curve then splits iff the transported action fixes some vertex.

#pragma once

#include <optional>
#include <vector>

#include "dualgraph/invariants.hpp"
#include "dualgraph/model.hpp"

namespace dualgraph {

struct BlownUpModel {
  MultiGraph graph;
  // Action of the generator sigma^d of H_d; order I/d.
  CyclicAction action;
  // Indexed by vertex of `graph`; set for the new chain vertices.
  std::vector<std::optional<ChainPosition>> provenance;
};

// Throws InvariantError when d does not divide I or e < 1.
BlownUpModel base_change(const CurveModel& m, ExtensionSpec x);

bool oracle_splits(const CurveModel& m, ExtensionSpec x);

}  // namespace dualgraph
