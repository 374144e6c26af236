// The graph-with-action families realizing every admissible (genus, index)
// pair: Cayley graphs of Z/I, cycles, Moebius ladders and coathanger chains.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgraph/action.hpp"
#include "dualgraph/model.hpp"

namespace dualgraph {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generating set S of Z/I in additive notation.
struct GeneratingSet {
  int order = 1;
  std::vector<int> residues;
};

// Empty when S is symmetric, avoids 0 and generates Z/I.
std::string generating_set_problem(const GeneratingSet& gs);

// Simple graph on Z/I with x ~ x+s for s in S; sigma acts by x -> x+1.
// Vertices are "0".."I-1"; the edge x -- x+s is "s<min(s,-s)>:<x>".
GraphWithAction cayley_graph(const GeneratingSet& gs);

// Cycle on Z_{2g-2} plus rungs {i, i+g-1} for i = 0..g-2, with rotation by
// one. At g = 2 the two cycle edges are parallel. Requires g >= 2.
GraphWithAction mobius_ladder(int genus);

// The I-cycle with rotation; for I = 2 two vertices joined by two edges that
// are exchanged by the generator. Requires I >= 2.
GraphWithAction cycle_model(int order);

// g coathangers {0-1, 0-2, 0-3, 2-3} chained through their pendant vertex 1;
// a single vertex for g = 0. Trivial action.
GraphWithAction coathanger_chain(int genus);

// True iff I divides 2g-2 (every I divides 0).
bool admissible(long genus, long index);

// Dispatches to the family realizing (g, I). Throws ConstructionError when
// I does not divide 2g-2.
CurveModel construct(int genus, int index);

enum class RealizabilityMode { kFull, kWeak };

struct RealizabilityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RealizabilityReport {
  std::vector<RealizabilityCheck> checks;
  bool passed() const;
};

// Residue field cardinality; nullopt stands for an infinite field.
using ResidueCardinality = std::optional<long>;

// Structural checks (connectivity, degree <= 3) plus the rational
// non-nodal point hypothesis for a residue field with q elements:
//   full: every vertex v with orbit size d_v has degree <= q^{d_v};
//   weak: some vertex fixed by the whole group has degree <= q.
RealizabilityReport check_realizability(const CurveModel& m, ResidueCardinality q, RealizabilityMode mode);

}  // namespace dualgraph
