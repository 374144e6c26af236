#include "dualgraph/invariants.hpp"

#include <limits>
#include <numeric>

#include "dualgraph/action.hpp"

namespace dualgraph {

const char* to_string(SplittingCase c) { return c == SplittingCase::kCase1 ? "Case1" : "Case2"; }

std::vector<int> divisors(int n) {
  std::vector<int> result;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) result.push_back(d);
  }
  return result;
}

namespace {

void check_extension(const CurveModel& m, ExtensionSpec x) {
  if (x.d < 1 || m.order() % x.d != 0)
    throw InvariantError("residue degree d = " + std::to_string(x.d) + " does not divide I = " +
                         std::to_string(m.order()));
  if (x.e < 1) throw InvariantError("ramification index must be positive");
}

long weighted_gcd(const CurveModel& m, bool with_multiplicity) {
  const auto sizes = vertex_orbit_sizes(m.graph, m.action, Subgroup{1});
  long result = 0;
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    long term = sizes[v] * m.components.at(v).ns_index;
    if (with_multiplicity) term *= m.components.at(v).multiplicity;
    result = std::gcd(result, term);
  }
  return result;
}

}  // namespace

long index(const CurveModel& m) { return weighted_gcd(m, false); }

long snc_index(const CurveModel& m) { return weighted_gcd(m, true); }

bool splits(const CurveModel& m, ExtensionSpec x) {
  check_extension(m, x);
  const Subgroup h{x.d};
  if (!fixed_vertices(m.graph, m.action, h).empty()) return true;
  return x.e % 2 == 0 && !stabilized_edges(m.graph, m.action, h).empty();
}

SplittingCase case_classification(const CurveModel& m) {
  for (int d : divisors(m.order())) {
    const Subgroup h{d};
    if (fixed_vertices(m.graph, m.action, h).empty() && !stabilized_edges(m.graph, m.action, h).empty())
      return SplittingCase::kCase2;
  }
  return SplittingCase::kCase1;
}

bool main_theorem_prediction(long genus, int index, ExtensionSpec x, SplittingCase c) {
  if (index < 1 || (2 * genus - 2) % index != 0)
    throw InvariantError("index " + std::to_string(index) + " does not divide 2g-2");
  if (x.d < 1 || index % x.d != 0) throw InvariantError("d must divide I");
  if (x.e < 1) throw InvariantError("ramification index must be positive");
  if (x.d == index) return true;
  if (c == SplittingCase::kCase1) return false;
  if (index % 2 != 0) throw InvariantError("Case 2 requires an even index");
  return x.d == index / 2 && x.e % 2 == 0;
}

SplittingCase expected_case(long genus, int index) {
  return (index % 2 != 0 || genus == 1) ? SplittingCase::kCase1 : SplittingCase::kCase2;
}

long m_invariant(const CurveModel& m) {
  const int order = m.order();
  long best = std::numeric_limits<long>::max();
  for (int f = 1; f <= order; ++f) {
    for (int e = 1; e <= 2; ++e) {
      if (static_cast<long>(f) * e < best && splits(m, ExtensionSpec{std::gcd(f, order), e})) best = f * e;
    }
  }
  return best;
}

SplittingReport splitting_report(const CurveModel& m, bool finite_residue) {
  SplittingReport report;
  report.index = index(m);
  report.splitting_case = case_classification(m);
  for (int d : divisors(m.order())) {
    for (int e = 1; e <= 2; ++e) report.table[{d, e}] = splits(m, ExtensionSpec{d, e});
  }
  if (finite_residue) report.m_invariant = m_invariant(m);
  return report;
}

}  // namespace dualgraph
