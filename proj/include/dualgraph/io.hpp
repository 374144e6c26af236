// JSON model files and DOT export.
//
// Model file:
//   {"graph":  {"vertices":[{"id":str}], "edges":[{"id":str,"ends":[str,str]}]},
//    "action": {"order":int, "vertex_map":{id:id}, "edge_map":{id:id}},
//    "components": {id: {"ns_index":int, "multiplicity":int}},   (optional)
//    "claimed": {"genus":int, "index":int}}                       (optional)
// "ends" is ordered: the first entry is the edge's tail.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dualgraph/action.hpp"
#include "dualgraph/invariants.hpp"
#include "dualgraph/model.hpp"

namespace dualgraph {

// Structural problems in an input document. `where` is a JSON pointer.
class ModelParseError : public std::runtime_error {
 public:
  ModelParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j, const std::string& where = "");

nlohmann::json action_to_json(const MultiGraph& g, const CyclicAction& a);
CyclicAction action_from_json(const MultiGraph& g, const nlohmann::json& j, const std::string& where = "");

nlohmann::json model_to_json(const CurveModel& m);
// Parses without validating the action; see model_problem().
CurveModel model_from_json(const nlohmann::json& j);

CurveModel load_model(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

// Undirected DOT. Edge identifiers become labels; with an action, vertices
// carry their orbit number as `orbit` and as a color from a 12-colour scheme.
std::string to_dot(const MultiGraph& g, const CyclicAction* action = nullptr);

nlohmann::json report_to_json(const SplittingReport& r);
std::string report_to_text(const SplittingReport& r);

}  // namespace dualgraph
