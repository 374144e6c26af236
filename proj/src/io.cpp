#include "dualgraph/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace dualgraph {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ModelParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ModelParseError(where, std::string("missing \"") + key + "\"");
  return *it;
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ModelParseError(where, "expected a string");
  return j.get_ref<const std::string&>();
}

long as_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ModelParseError(where, "expected an integer");
  return j.get<long>();
}

// JSON pointer escaping for object keys.
std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

template <typename Lookup>
std::vector<std::size_t> parse_map(const json& j, std::size_t size, const std::vector<std::string>& ids,
                                   Lookup lookup, const std::string& where, const char* kind) {
  if (!j.is_object()) throw ModelParseError(where, "expected an object");
  std::vector<std::size_t> map(size, size);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string at = where + "/" + escape(it.key());
    auto src = lookup(it.key());
    if (!src) throw ModelParseError(at, std::string("unknown ") + kind + " '" + it.key() + "'");
    auto dst = lookup(as_string(it.value(), at));
    if (!dst) throw ModelParseError(at, std::string("unknown ") + kind + " '" + it.value().get<std::string>() + "'");
    map[*src] = *dst;
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (map[i] == size) throw ModelParseError(where, std::string("no image for ") + kind + " '" + ids[i] + "'");
  }
  return map;
}

}  // namespace

json graph_to_json(const MultiGraph& g) {
  json vertices = json::array();
  for (const auto& id : g.vertex_ids()) vertices.push_back({{"id", id}});
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"ends", {g.vertex_id(e.tail), g.vertex_id(e.head)}}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& j, const std::string& where) {
  const json& vertices = member(j, "vertices", where);
  if (!vertices.is_array()) throw ModelParseError(where + "/vertices", "expected an array");
  GraphBuilder builder;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = where + "/vertices/" + std::to_string(i);
    try {
      builder.add_vertex(as_string(member(vertices[i], "id", at), at + "/id"));
    } catch (const GraphError& err) {
      throw ModelParseError(at, err.what());
    }
  }
  const json& edges = member(j, "edges", where);
  if (!edges.is_array()) throw ModelParseError(where + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + "/edges/" + std::to_string(i);
    const std::string& id = as_string(member(edges[i], "id", at), at + "/id");
    const json& ends = member(edges[i], "ends", at);
    if (!ends.is_array() || ends.size() != 2) throw ModelParseError(at + "/ends", "expected two endpoints");
    try {
      builder.add_edge(id, as_string(ends[0], at + "/ends/0"), as_string(ends[1], at + "/ends/1"));
    } catch (const GraphError& err) {
      throw ModelParseError(at, err.what());
    }
  }
  try {
    return builder.build();
  } catch (const GraphError& err) {
    throw ModelParseError(where, err.what());
  }
}

json action_to_json(const MultiGraph& g, const CyclicAction& a) {
  json vmap = json::object();
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v) vmap[g.vertex_id(v)] = g.vertex_id(a.vertex_map[v]);
  json emap = json::object();
  for (std::size_t e = 0; e < a.edge_map.size(); ++e) emap[g.edge(e).id] = g.edge(a.edge_map[e]).id;
  return {{"order", a.order}, {"vertex_map", std::move(vmap)}, {"edge_map", std::move(emap)}};
}

CyclicAction action_from_json(const MultiGraph& g, const json& j, const std::string& where) {
  CyclicAction a;
  a.order = static_cast<int>(as_integer(member(j, "order", where), where + "/order"));
  if (a.order < 1) throw ModelParseError(where + "/order", "order must be positive");
  a.vertex_map = parse_map(
      member(j, "vertex_map", where), g.vertex_count(), g.vertex_ids(),
      [&](const std::string& id) { return g.find_vertex(id); }, where + "/vertex_map", "vertex");
  std::vector<std::string> edge_ids;
  for (const Edge& e : g.edges()) edge_ids.push_back(e.id);
  a.edge_map = parse_map(
      member(j, "edge_map", where), g.edge_count(), edge_ids,
      [&](const std::string& id) { return g.find_edge(id); }, where + "/edge_map", "edge");
  return a;
}

json model_to_json(const CurveModel& m) {
  json components = json::object();
  for (std::size_t v = 0; v < m.components.size(); ++v) {
    components[m.graph.vertex_id(v)] = {{"ns_index", m.components[v].ns_index},
                                        {"multiplicity", m.components[v].multiplicity}};
  }
  json out = {{"graph", graph_to_json(m.graph)},
              {"action", action_to_json(m.graph, m.action)},
              {"components", std::move(components)}};
  if (m.claimed) out["claimed"] = {{"genus", m.claimed->genus}, {"index", m.claimed->index}};
  return out;
}

CurveModel model_from_json(const json& j) {
  if (!j.is_object()) throw ModelParseError("", "model must be a JSON object");
  MultiGraph graph = graph_from_json(member(j, "graph", ""), "/graph");
  CyclicAction action = action_from_json(graph, member(j, "action", ""), "/action");

  std::vector<ComponentData> components(graph.vertex_count());
  if (auto it = j.find("components"); it != j.end()) {
    if (!it->is_object()) throw ModelParseError("/components", "expected an object");
    for (auto c = it->begin(); c != it->end(); ++c) {
      const std::string at = "/components/" + escape(c.key());
      auto v = graph.find_vertex(c.key());
      if (!v) throw ModelParseError(at, "unknown vertex '" + c.key() + "'");
      if (!c.value().is_object()) throw ModelParseError(at, "expected an object");
      if (auto f = c.value().find("ns_index"); f != c.value().end())
        components[*v].ns_index = as_integer(*f, at + "/ns_index");
      if (auto f = c.value().find("multiplicity"); f != c.value().end())
        components[*v].multiplicity = as_integer(*f, at + "/multiplicity");
      if (components[*v].ns_index < 1 || components[*v].multiplicity < 1)
        throw ModelParseError(at, "ns_index and multiplicity must be positive");
    }
  }

  std::optional<Claim> claimed;
  if (auto it = j.find("claimed"); it != j.end() && !it->is_null()) {
    claimed = Claim{as_integer(member(*it, "genus", "/claimed"), "/claimed/genus"),
                    as_integer(member(*it, "index", "/claimed"), "/claimed/index")};
  }
  return CurveModel{std::move(graph), std::move(action), std::move(components), claimed};
}

CurveModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelParseError("", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ModelParseError("", path + ": " + err.what());
  }
  return model_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace {

std::string quoted(const std::string& s) {
  std::ostringstream out;
  out << std::quoted(s);
  return out.str();
}

}  // namespace

std::string to_dot(const MultiGraph& g, const CyclicAction* action) {
  std::vector<int> orbit(g.vertex_count(), -1);
  if (action) {
    int next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (orbit[v] >= 0) continue;
      for (std::size_t w = v; orbit[w] < 0; w = action->vertex_map[w]) orbit[w] = next;
      ++next;
    }
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.vertex_id(v));
    if (orbit[v] >= 0) {
      out << " [orbit=" << orbit[v] << ", colorscheme=set312, style=filled, fillcolor=" << (orbit[v] % 12 + 1)
          << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << quoted(g.vertex_id(e.tail)) << " -- " << quoted(g.vertex_id(e.head))
        << " [label=" << quoted(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

json report_to_json(const SplittingReport& r) {
  json table = json::array();
  for (const auto& [key, verdict] : r.table) {
    table.push_back({{"d", key.first}, {"e", key.second}, {"splits", verdict}});
  }
  json out = {{"index", r.index}, {"case", to_string(r.splitting_case)}, {"table", std::move(table)}};
  if (r.m_invariant) out["m_invariant"] = *r.m_invariant;
  return out;
}

std::string report_to_text(const SplittingReport& r) {
  std::ostringstream out;
  out << "index: " << r.index << "\n";
  out << "case:  " << to_string(r.splitting_case) << "\n";
  if (r.m_invariant) out << "m-invariant: " << *r.m_invariant << "\n";
  out << std::setw(6) << "d" << std::setw(10) << "e odd" << std::setw(10) << "e even" << "\n";
  std::map<int, std::pair<bool, bool>> rows;
  for (const auto& [key, verdict] : r.table) {
    auto& row = rows[key.first];
    (key.second == 1 ? row.first : row.second) = verdict;
  }
  for (const auto& [d, row] : rows) {
    out << std::setw(6) << d << std::setw(10) << (row.first ? "yes" : "no") << std::setw(10)
        << (row.second ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace dualgraph
