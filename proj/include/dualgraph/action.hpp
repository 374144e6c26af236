// Actions of a cyclic group G_I = <sigma | sigma^I = 1> on a MultiGraph.
//
// An action is given by the image of the generator on vertices and on edges,
// both as index permutations relative to one graph. Edge images are part of
// the data because parallel edges are not determined by the vertex map.

#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgraph/multigraph.hpp"

namespace dualgraph {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CyclicAction {
  int order = 1;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;

  friend bool operator==(const CyclicAction&, const CyclicAction&) = default;
};

// H_d = <sigma^d>, the subgroup of index d. d = order is the trivial
// subgroup, d = 1 the whole group.
struct Subgroup {
  int codegree = 1;
};

struct GraphWithAction {
  MultiGraph graph;
  CyclicAction action;
};

enum class ActionLaw {
  kOrderPositive,
  kVertexMapSize,
  kEdgeMapSize,
  kVertexBijection,
  kEdgeBijection,
  kCompatibility,
  kOrder,
};

const char* to_string(ActionLaw law);

struct Violation {
  ActionLaw law;
  std::string subject;  // offending vertex/edge id, empty for global laws
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const MultiGraph& g, const CyclicAction& a);

CyclicAction trivial_action(const MultiGraph& g);

// The generator sigma^k as index maps (k taken mod order, k >= 0).
std::vector<std::size_t> vertex_power(const CyclicAction& a, long k);
std::vector<std::size_t> edge_power(const CyclicAction& a, long k);

// The action of H_d with generator sigma^d; its order is I/d.
// Throws ActionError if d does not divide the order.
CyclicAction restrict_to_subgroup(const CyclicAction& a, Subgroup h);

// Least n >= 1 with sigma^n = id on both vertices and edges.
int exact_order(const CyclicAction& a);

std::vector<int> vertex_orbit_sizes(const MultiGraph& g, const CyclicAction& a, Subgroup h);
std::vector<int> edge_orbit_sizes(const MultiGraph& g, const CyclicAction& a, Subgroup h);

std::vector<std::size_t> fixed_vertices(const MultiGraph& g, const CyclicAction& a, Subgroup h);

struct StabilizedEdge {
  std::size_t edge = 0;
  bool flipped = false;  // sigma^d exchanges the two endpoints

  friend bool operator==(const StabilizedEdge&, const StabilizedEdge&) = default;
};

std::vector<StabilizedEdge> stabilized_edges(const MultiGraph& g, const CyclicAction& a, Subgroup h);

bool acts_freely_on_vertices(const MultiGraph& g, const CyclicAction& a);
bool acts_freely_on_edges(const MultiGraph& g, const CyclicAction& a);

// Derived graph of a Z/I voltage assignment: vertices "<x>@<j>", edges
// "<edge>@<j>" joining (tail, j) to (head, j + voltage), with sigma shifting
// j by one. The result is a valid action, free on vertices, but need not be
// connected.
GraphWithAction lift_voltage_graph(const MultiGraph& quotient, const std::vector<long>& voltages,
                                   int order);

struct RandomLiftOptions {
  int max_quotient_vertices = 5;
  int max_quotient_edges = 8;
  int max_order = 12;
  int max_attempts = 1000;
};

// Random connected quotient with random voltages, resampled until the lift is
// connected.
GraphWithAction random_voltage_lift(std::mt19937_64& rng, const RandomLiftOptions& options = {});

}  // namespace dualgraph
