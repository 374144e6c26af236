// dualgraph: build dual-graph models, compute their index and splitting
// fields, run the blowup oracle, and verify the constructions exhaustively.
//
// Exit codes: 0 ok, 1 mathematical disagreement or failed check, 2 invalid
// input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualgraph/blowup.hpp"
#include "dualgraph/constructions.hpp"
#include "dualgraph/invariants.hpp"
#include "dualgraph/io.hpp"
#include "dualgraph/verify.hpp"

namespace {

using namespace dualgraph;

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kInvalidInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResidueCardinality parse_residue(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::nullopt;
  std::size_t used = 0;
  long q = 0;
  try {
    q = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || q < 2) throw InputError("--residue-q expects an integer >= 2 or 'inf', got '" + text + "'");
  return q;
}

CurveModel load_valid_model(const std::string& path) {
  CurveModel m = load_model(path);
  if (auto problem = model_problem(m); !problem.empty()) throw InputError(path + ": " + problem);
  return m;
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json(j, out_path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual graphs of totally degenerate semistable curves with cyclic Galois action"};
  app.require_subcommand(1);

  int genus = 0;
  int index_arg = 1;
  std::string out_path;
  std::string dot_path;
  bool as_json = false;

  auto* construct_cmd = app.add_subcommand("construct", "Build the model for (genus, index)");
  construct_cmd->add_option("--genus", genus, "Genus g >= 0")->required();
  construct_cmd->add_option("--index", index_arg, "Index I dividing 2g-2")->required();
  construct_cmd->add_option("--out", out_path, "Model JSON output (default stdout)");
  construct_cmd->add_option("--dot", dot_path, "DOT output, vertices coloured by orbit");

  std::string model_path;
  auto* index_cmd = app.add_subcommand("index", "Index of a model");
  index_cmd->add_option("model", model_path, "Model JSON")->required();
  bool snc = false;
  index_cmd->add_flag("--snc", snc, "Also evaluate the multiplicity-weighted (SNC) formula");
  index_cmd->add_flag("--json", as_json);

  auto* splitting_cmd = app.add_subcommand("splitting", "Splitting table of a model");
  splitting_cmd->add_option("model", model_path, "Model JSON")->required();
  bool finite_residue = false;
  splitting_cmd->add_flag("--finite-residue", finite_residue, "Assume a finite residue field and report the m-invariant");
  splitting_cmd->add_flag("--json", as_json);

  auto* mtheorem_cmd = app.add_subcommand("mtheorem", "Predicted splitting pattern for (genus, index)");
  mtheorem_cmd->add_option("--genus", genus)->required();
  mtheorem_cmd->add_option("--index", index_arg)->required();
  int case_arg = 0;
  mtheorem_cmd->add_option("--case", case_arg, "1 or 2 (default: 1 iff I is odd or g = 1)")->check(CLI::Range(1, 2));
  int d_arg = 0;
  int e_arg = 0;
  mtheorem_cmd->add_option("--d", d_arg, "Residue degree d | I (with --e: single verdict)");
  mtheorem_cmd->add_option("--e", e_arg, "Ramification index");
  mtheorem_cmd->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "Blowup oracle for one extension");
  oracle_cmd->add_option("model", model_path, "Model JSON")->required();
  oracle_cmd->add_option("--d", d_arg)->required();
  oracle_cmd->add_option("--e", e_arg)->required();
  oracle_cmd->add_option("--emit-dot", dot_path, "DOT of the subdivided graph");
  oracle_cmd->add_flag("--json", as_json);

  auto* check_cmd = app.add_subcommand("check", "Realizability checks");
  check_cmd->add_option("model", model_path, "Model JSON")->required();
  std::string residue_arg = "inf";
  check_cmd->add_option("--residue-q", residue_arg, "Residue field size or 'inf'");
  std::string mode_arg = "full";
  check_cmd->add_option("--mode", mode_arg)->check(CLI::IsMember({"full", "weak"}));
  check_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification of the constructions");
  VerificationOptions options;
  verify_cmd->add_option("--genus-max", options.genus_max)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--e-max", options.e_max)->check(CLI::PositiveNumber);
  int index_cap = 0;
  verify_cmd->add_option("--index-cap", index_cap, "Largest I for g = 1 (default 2*genus-max+2)")
      ->check(CLI::PositiveNumber);
  std::vector<std::string> residue_args;
  verify_cmd->add_option("--residue-q", residue_args, "Residue field sizes to check (repeatable)");
  verify_cmd->add_option("--model", model_path, "Verify one model file against its claimed (genus, index)");
  verify_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*construct_cmd) {
      const CurveModel m = construct(genus, index_arg);
      emit(model_to_json(m), out_path);
      if (!dot_path.empty()) write_text(to_dot(m.graph, &m.action), dot_path);
      return kOk;
    }

    if (*index_cmd) {
      const CurveModel m = load_valid_model(model_path);
      const long value = index(m);
      if (as_json) {
        nlohmann::json out = {{"index", value}};
        if (snc) out["snc_index"] = snc_index(m);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << value << "\n";
        if (snc) std::cout << "snc: " << snc_index(m) << "\n";
      }
      return kOk;
    }

    if (*splitting_cmd) {
      const SplittingReport report = splitting_report(load_valid_model(model_path), finite_residue);
      std::cout << (as_json ? report_to_json(report).dump(2) + "\n" : report_to_text(report));
      return kOk;
    }

    if (*mtheorem_cmd) {
      if (!admissible(genus, index_arg))
        throw InputError("index " + std::to_string(index_arg) + " does not divide 2g-2 = " + std::to_string(2 * genus - 2));
      const SplittingCase c = case_arg == 0 ? expected_case(genus, index_arg)
                                            : (case_arg == 1 ? SplittingCase::kCase1 : SplittingCase::kCase2);
      if (c == SplittingCase::kCase2 && index_arg % 2 != 0) throw InputError("Case 2 requires an even index");
      if (d_arg != 0 || e_arg != 0) {
        if (d_arg < 1 || e_arg < 1 || index_arg % d_arg != 0) throw InputError("need --d dividing I and --e >= 1");
        const bool verdict = main_theorem_prediction(genus, index_arg, ExtensionSpec{d_arg, e_arg}, c);
        if (as_json) {
          std::cout << nlohmann::json{{"d", d_arg}, {"e", e_arg}, {"case", to_string(c)}, {"splits", verdict}}.dump(2)
                    << "\n";
        } else {
          std::cout << (verdict ? "splits" : "does not split") << "\n";
        }
        return kOk;
      }
      SplittingReport predicted;
      predicted.index = index_arg;
      predicted.splitting_case = c;
      for (int d : divisors(index_arg)) {
        for (int e = 1; e <= 2; ++e) predicted.table[{d, e}] = main_theorem_prediction(genus, index_arg, ExtensionSpec{d, e}, c);
      }
      std::cout << (as_json ? report_to_json(predicted).dump(2) + "\n" : report_to_text(predicted));
      return kOk;
    }

    if (*oracle_cmd) {
      const CurveModel m = load_valid_model(model_path);
      if (d_arg < 1 || m.order() % d_arg != 0 || e_arg < 1)
        throw InputError("need --d dividing I = " + std::to_string(m.order()) + " and --e >= 1");
      const BlownUpModel blown = base_change(m, ExtensionSpec{d_arg, e_arg});
      std::vector<std::string> fixed;
      for (std::size_t v = 0; v < blown.action.vertex_map.size(); ++v) {
        if (blown.action.vertex_map[v] == v) fixed.push_back(blown.graph.vertex_id(v));
      }
      const bool verdict = !fixed.empty();
      if (as_json) {
        std::cout << nlohmann::json{{"vertices", blown.graph.vertex_count()},
                                    {"edges", blown.graph.edge_count()},
                                    {"euler_characteristic", euler_characteristic(blown.graph)},
                                    {"fixed_vertices", fixed},
                                    {"splits", verdict}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "blown-up graph: " << blown.graph.vertex_count() << " vertices, " << blown.graph.edge_count()
                  << " edges, chi = " << euler_characteristic(blown.graph) << "\n";
        std::cout << "fixed vertices: " << fixed.size() << "\n";
        std::cout << (verdict ? "splits" : "does not split") << "\n";
      }
      if (!dot_path.empty()) write_text(to_dot(blown.graph, &blown.action), dot_path);
      return kOk;
    }

    if (*check_cmd) {
      const CurveModel m = load_valid_model(model_path);
      const auto mode = mode_arg == "weak" ? RealizabilityMode::kWeak : RealizabilityMode::kFull;
      const RealizabilityReport report = check_realizability(m, parse_residue(residue_arg), mode);
      if (as_json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        std::cout << nlohmann::json{{"checks", checks}, {"passed", report.passed()}}.dump(2) << "\n";
      } else {
        for (const auto& c : report.checks)
          std::cout << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        std::cout << (report.passed() ? "pass" : "fail") << "\n";
      }
      return report.passed() ? kOk : kDisagreement;
    }

    if (*verify_cmd) {
      if (index_cap > 0) options.genus_one_index_cap = index_cap;
      if (!residue_args.empty()) {
        options.residues.clear();
        for (const auto& r : residue_args) options.residues.push_back(parse_residue(r));
      }
      VerificationReport report;
      if (!model_path.empty()) {
        // Structural parse errors are input errors; an invalid action is a
        // failed cell.
        const CurveModel m = load_model(model_path);
        if (!m.claimed) throw InputError(model_path + ": verifying a model file needs \"claimed\" metadata");
        report.cells.push_back(verify_model(m, *m.claimed, options));
      } else {
        report = verify_all(options);
      }
      std::cout << (as_json ? to_json(report).dump(2) + "\n" : to_text(report));
      return report.passed() ? kOk : kDisagreement;
    }
  } catch (const std::exception& e) {
    // Parse failures, invalid models and inadmissible parameters alike.
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}
