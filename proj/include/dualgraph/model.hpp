#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dualgraph/action.hpp"
#include "dualgraph/multigraph.hpp"

namespace dualgraph {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-component data. For a totally degenerate semistable fiber every
// component is a genus-0 curve and both numbers are 1.
struct ComponentData {
  long ns_index = 1;      // nonsingular index of the component over its field of definition
  long multiplicity = 1;  // only meaningful for SNC fibers

  friend bool operator==(const ComponentData&, const ComponentData&) = default;
};

struct Claim {
  long genus = 0;
  long index = 1;

  friend bool operator==(const Claim&, const Claim&) = default;
};

// Dual graph of a special fiber together with the Galois action and the
// component data.
struct CurveModel {
  MultiGraph graph;
  CyclicAction action;
  std::vector<ComponentData> components;  // indexed by vertex
  std::optional<Claim> claimed;

  int order() const { return action.order; }

  friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

// Model with unit component data.
CurveModel make_model(GraphWithAction graph_with_action, std::optional<Claim> claimed = std::nullopt);

// Empty string when the model is usable: the action validates, the graph is
// connected, and the component table matches the vertex count with positive
// entries. Otherwise a description of the first problem.
std::string model_problem(const CurveModel& m);

// Throws ModelError carrying model_problem().
void require_valid(const CurveModel& m);

}  // namespace dualgraph
