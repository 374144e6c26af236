// Exhaustive check of the constructions: for each admissible (g, I) the
// model is built, its index and splitting table are computed, and the table
// is compared with the predicted pattern and with the blowup oracle.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dualgraph/constructions.hpp"
#include "dualgraph/invariants.hpp"

namespace dualgraph {

struct VerificationOptions {
  int genus_max = 6;
  int e_max = 6;
  // Largest I tried for g = 1; defaults to 2 * genus_max + 2.
  std::optional<int> genus_one_index_cap;
  std::vector<ResidueCardinality> residues{std::nullopt};
};

using VerdictTable = std::map<std::pair<int, int>, bool>;

struct CellReport {
  long genus = 0;
  int index = 1;

  std::size_t vertices = 0;
  std::size_t edges = 0;
  long euler_characteristic = 0;
  bool connected = false;
  int max_degree = 0;
  std::optional<long> arithmetic_genus;
  std::string validation;  // "valid" or the violation summary
  bool action_valid = false;
  int exact_order = 0;

  long computed_index = 0;
  SplittingCase computed_case = SplittingCase::kCase1;
  SplittingCase expected_case = SplittingCase::kCase1;
  VerdictTable classifier;  // d | I, 1 <= e <= e_max
  VerdictTable oracle;
  VerdictTable prediction;

  // (label, passed) for each configured residue field and mode.
  std::vector<std::pair<std::string, bool>> realizability;

  bool structure_ok = false;   // connected, degree <= 3, genus and order as claimed
  bool index_ok = false;       // index == I
  bool prediction_ok = false;  // classifier == prediction and case as expected
  bool oracle_ok = false;      // classifier == oracle

  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct VerificationReport {
  std::vector<CellReport> cells;  // sorted by (g, I)
  bool passed() const;
};

// Admissible (g, I) pairs with g <= genus_max, in (g, I) order.
std::vector<std::pair<int, int>> verification_cells(const VerificationOptions& options);

CellReport verify_model(const CurveModel& m, Claim claim, const VerificationOptions& options);

VerificationReport verify_all(const VerificationOptions& options);

nlohmann::json to_json(const CellReport& cell);
nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace dualgraph
