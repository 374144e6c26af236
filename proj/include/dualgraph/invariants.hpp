// Index, splitting fields and related invariants read off a CurveModel.
//
// A finite extension L/K is abstracted to (d, e): d is the degree over k of
// the intersection of L's residue field with k_I, so that the residue Galois
// group acts through H_d = <sigma^d>; e is the ramification index.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dualgraph/model.hpp"

namespace dualgraph {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtensionSpec {
  int d = 1;
  int e = 1;
};

enum class SplittingCase { kCase1, kCase2 };

const char* to_string(SplittingCase c);

// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

// gcd over components of (orbit size) * ns_index.
long index(const CurveModel& m);

// gcd over components of (orbit size) * multiplicity * ns_index.
long snc_index(const CurveModel& m);

// L splits C iff H_d fixes a component, or e is even and H_d stabilizes an
// edge. Throws InvariantError when d does not divide I or e < 1.
bool splits(const CurveModel& m, ExtensionSpec x);

// Case 2 iff for some d | I the subgroup H_d fixes no component but
// stabilizes an edge.
SplittingCase case_classification(const CurveModel& m);

// The splitting pattern stated for the constructed curves:
//   Case 1: d == I.
//   Case 2: d == I, or d == I/2 and e even.
bool main_theorem_prediction(long genus, int index, ExtensionSpec x, SplittingCase c);

// Case assignment of the constructions: Case 1 iff I is odd or g == 1.
SplittingCase expected_case(long genus, int index);

// Least f * e over f in [1, I], e in {1, 2} with splits(gcd(f, I), e).
// Assumes a finite residue field.
long m_invariant(const CurveModel& m);

struct SplittingReport {
  long index = 1;
  SplittingCase splitting_case = SplittingCase::kCase1;
  // (d, e) -> verdict for every d | I and e in {1, 2}.
  std::map<std::pair<int, int>, bool> table;
  std::optional<long> m_invariant;
};

SplittingReport splitting_report(const CurveModel& m, bool finite_residue = false);

}  // namespace dualgraph
