#include "dualgraph/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dualgraph/blowup.hpp"

namespace dualgraph {

bool VerificationReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.passed(); });
}

std::vector<std::pair<int, int>> verification_cells(const VerificationOptions& options) {
  std::vector<std::pair<int, int>> cells;
  const int cap = options.genus_one_index_cap.value_or(2 * options.genus_max + 2);
  for (int g = 0; g <= options.genus_max; ++g) {
    const int limit = g == 1 ? cap : std::abs(2 * g - 2);
    for (int index = 1; index <= limit; ++index) {
      if (admissible(g, index)) cells.emplace_back(g, index);
    }
  }
  return cells;
}

namespace {

std::string residue_label(ResidueCardinality q) { return q ? "q=" + std::to_string(*q) : "q=inf"; }

std::string describe_mismatch(const VerdictTable& lhs, const VerdictTable& rhs) {
  for (const auto& [key, verdict] : lhs) {
    auto it = rhs.find(key);
    if (it == rhs.end() || it->second != verdict) {
      return "(d=" + std::to_string(key.first) + ", e=" + std::to_string(key.second) + ")";
    }
  }
  return "table sizes differ";
}

}  // namespace

CellReport verify_model(const CurveModel& m, Claim claim, const VerificationOptions& options) {
  CellReport cell;
  cell.genus = claim.genus;
  cell.index = static_cast<int>(claim.index);
  cell.vertices = m.graph.vertex_count();
  cell.edges = m.graph.edge_count();
  cell.euler_characteristic = euler_characteristic(m.graph);
  cell.connected = is_connected(m.graph);
  cell.max_degree = max_degree(m.graph);
  if (cell.connected) cell.arithmetic_genus = arithmetic_genus(m.graph);

  const ValidationReport validation = validate(m.graph, m.action);
  cell.action_valid = validation.ok();
  cell.validation = validation.summary();
  if (!cell.action_valid) {
    cell.failures.push_back("action invalid: " + cell.validation);
    return cell;
  }
  if (m.order() != cell.index) {
    cell.failures.push_back("action order " + std::to_string(m.order()) + " differs from claimed index");
    return cell;
  }
  if (auto problem = model_problem(m); !problem.empty()) {
    cell.failures.push_back(problem);
    return cell;
  }
  cell.exact_order = exact_order(m.action);

  cell.structure_ok = cell.connected && cell.max_degree <= 3 && cell.arithmetic_genus == claim.genus &&
                      cell.exact_order == cell.index;
  if (!cell.structure_ok) {
    cell.failures.push_back("structure: connected=" + std::to_string(cell.connected) +
                            " max_degree=" + std::to_string(cell.max_degree) +
                            " exact_order=" + std::to_string(cell.exact_order));
  }

  cell.computed_index = index(m);
  cell.index_ok = cell.computed_index == cell.index;
  if (!cell.index_ok) cell.failures.push_back("index " + std::to_string(cell.computed_index));

  cell.computed_case = case_classification(m);
  const bool admissible_claim = admissible(claim.genus, claim.index);
  cell.expected_case = admissible_claim ? expected_case(claim.genus, cell.index) : SplittingCase::kCase1;

  for (int d : divisors(cell.index)) {
    for (int e = 1; e <= options.e_max; ++e) {
      const ExtensionSpec x{d, e};
      cell.classifier[{d, e}] = splits(m, x);
      cell.oracle[{d, e}] = oracle_splits(m, x);
      if (admissible_claim) cell.prediction[{d, e}] = main_theorem_prediction(claim.genus, cell.index, x, cell.expected_case);
    }
  }

  if (!admissible_claim) {
    cell.failures.push_back("claimed index does not divide 2g-2");
  } else {
    cell.prediction_ok = cell.classifier == cell.prediction && cell.computed_case == cell.expected_case;
    if (cell.computed_case != cell.expected_case) {
      cell.failures.push_back(std::string("case ") + to_string(cell.computed_case) + ", expected " +
                              to_string(cell.expected_case));
    }
    if (cell.classifier != cell.prediction) {
      cell.failures.push_back("classifier disagrees with prediction at " +
                              describe_mismatch(cell.classifier, cell.prediction));
    }
  }
  cell.oracle_ok = cell.classifier == cell.oracle;
  if (!cell.oracle_ok)
    cell.failures.push_back("classifier disagrees with oracle at " + describe_mismatch(cell.classifier, cell.oracle));

  for (const ResidueCardinality& q : options.residues) {
    for (auto mode : {RealizabilityMode::kFull, RealizabilityMode::kWeak}) {
      const bool ok = check_realizability(m, q, mode).passed();
      cell.realizability.emplace_back(residue_label(q) + (mode == RealizabilityMode::kFull ? "/full" : "/weak"), ok);
    }
  }
  return cell;
}

VerificationReport verify_all(const VerificationOptions& options) {
  VerificationReport report;
  for (const auto& [g, index] : verification_cells(options)) {
    report.cells.push_back(verify_model(construct(g, index), Claim{g, index}, options));
  }
  return report;
}

namespace {

nlohmann::json table_json(const VerdictTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, verdict] : table) out.push_back({key.first, key.second, verdict});
  return out;
}

}  // namespace

nlohmann::json to_json(const CellReport& cell) {
  nlohmann::json out = {
      {"genus", cell.genus},
      {"index", cell.index},
      {"vertices", cell.vertices},
      {"edges", cell.edges},
      {"euler_characteristic", cell.euler_characteristic},
      {"connected", cell.connected},
      {"max_degree", cell.max_degree},
      {"validation", cell.validation},
      {"computed_index", cell.computed_index},
      {"case", to_string(cell.computed_case)},
      {"expected_case", to_string(cell.expected_case)},
      {"classifier", table_json(cell.classifier)},
      {"oracle", table_json(cell.oracle)},
      {"prediction", table_json(cell.prediction)},
      {"agreement", {{"structure", cell.structure_ok}, {"index", cell.index_ok},
                     {"prediction", cell.prediction_ok}, {"oracle", cell.oracle_ok}}},
      {"failures", cell.failures},
      {"passed", cell.passed()},
  };
  if (cell.arithmetic_genus) out["arithmetic_genus"] = *cell.arithmetic_genus;
  nlohmann::json realizability = nlohmann::json::object();
  for (const auto& [label, ok] : cell.realizability) realizability[label] = ok;
  out["realizability"] = std::move(realizability);
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : report.cells) cells.push_back(to_json(cell));
  return {{"cells", std::move(cells)}, {"passed", report.passed()}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << std::setw(4) << "g" << std::setw(5) << "I" << std::setw(5) << "V" << std::setw(5) << "E" << std::setw(5)
      << "chi" << std::setw(5) << "deg" << std::setw(6) << "index" << std::setw(7) << "case" << "  result\n";
  for (const auto& c : report.cells) {
    out << std::setw(4) << c.genus << std::setw(5) << c.index << std::setw(5) << c.vertices << std::setw(5)
        << c.edges << std::setw(5) << c.euler_characteristic << std::setw(5) << c.max_degree << std::setw(6)
        << c.computed_index << std::setw(7) << to_string(c.computed_case) << "  " << (c.passed() ? "ok" : "FAIL");
    for (const auto& f : c.failures) out << " | " << f;
    out << "\n";
  }
  out << (report.passed() ? "all " + std::to_string(report.cells.size()) + " cells verified\n"
                          : std::string("verification FAILED\n"));
  return out.str();
}

}  // namespace dualgraph
