#include "dualgraph/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dualgraph {

MultiGraph::MultiGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  if (vertex_ids_.empty()) throw GraphError("graph must have at least one vertex");
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertex_ids_[v], v).second)
      throw GraphError("duplicate vertex id '" + vertex_ids_[v] + "'");
  }
  incidence_.resize(vertex_ids_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!edge_lookup_.emplace(edge.id, e).second)
      throw GraphError("duplicate edge id '" + edge.id + "'");
    if (edge.tail >= vertex_ids_.size() || edge.head >= vertex_ids_.size())
      throw GraphError("edge '" + edge.id + "' has an endpoint outside the vertex set");
    incidence_[edge.tail].push_back(e);
    incidence_[edge.head].push_back(e);
  }
}

std::optional<std::size_t> MultiGraph::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MultiGraph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

int MultiGraph::degree(std::size_t v) const {
  return static_cast<int>(incidence_.at(v).size());
}

int MultiGraph::degree(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw GraphError("unknown vertex id '" + id + "'");
  return degree(*v);
}

std::size_t GraphBuilder::add_vertex(std::string id) {
  auto [it, inserted] = lookup_.emplace(id, vertices_.size());
  if (!inserted) throw GraphError("duplicate vertex id '" + id + "'");
  vertices_.push_back(std::move(id));
  return it->second;
}

std::size_t GraphBuilder::add_edge(std::string id, std::size_t tail, std::size_t head) {
  edges_.push_back(Edge{std::move(id), tail, head});
  return edges_.size() - 1;
}

std::size_t GraphBuilder::add_edge(std::string id, const std::string& tail, const std::string& head) {
  auto t = lookup_.find(tail);
  auto h = lookup_.find(head);
  if (t == lookup_.end() || h == lookup_.end())
    throw GraphError("edge '" + id + "' references an unknown vertex");
  return add_edge(std::move(id), t->second, h->second);
}

long euler_characteristic(const MultiGraph& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count());
}

long arithmetic_genus(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("arithmetic genus needs a connected graph");
  return 1 - euler_characteristic(g);
}

bool is_connected(const MultiGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incidences(v)) {
      std::size_t w = g.edge(e).other_end(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

int max_degree(const MultiGraph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t Subdivision::chain_vertex(const MultiGraph& original, std::size_t edge, int p) const {
  const Edge& parent = original.edge(edge);
  if (p == 0) return parent.tail;
  if (p == segments) return parent.head;
  return original_vertex_count + edge * static_cast<std::size_t>(segments - 1) +
         static_cast<std::size_t>(p - 1);
}

std::size_t Subdivision::chain_segment(std::size_t edge, int k) const {
  return edge * static_cast<std::size_t>(segments) + static_cast<std::size_t>(k);
}

Subdivision subdivide(const MultiGraph& g, int e) {
  if (e < 1) throw GraphError("subdivision needs e >= 1");
  if (e == 1) {
    return Subdivision{g, 1, std::vector<std::optional<ChainPosition>>(g.vertex_count()),
                       g.vertex_count()};
  }
  std::vector<std::string> vertices = g.vertex_ids();
  std::vector<std::optional<ChainPosition>> provenance(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    for (int p = 1; p < e; ++p) {
      vertices.push_back(g.edge(i).id + "/" + std::to_string(p));
      provenance.push_back(ChainPosition{i, p});
    }
  }
  const std::size_t n = g.vertex_count();
  const auto internal = [&](std::size_t edge, int p) -> std::size_t {
    const Edge& parent = g.edge(edge);
    if (p == 0) return parent.tail;
    if (p == e) return parent.head;
    return n + edge * static_cast<std::size_t>(e - 1) + static_cast<std::size_t>(p - 1);
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * static_cast<std::size_t>(e));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    for (int k = 0; k < e; ++k) {
      edges.push_back(Edge{g.edge(i).id + "#" + std::to_string(k), internal(i, k), internal(i, k + 1)});
    }
  }
  return Subdivision{MultiGraph(std::move(vertices), std::move(edges)), e, std::move(provenance), n};
}

namespace {

using Multiplicity = std::vector<std::vector<int>>;

Multiplicity multiplicity_matrix(const MultiGraph& g) {
  Multiplicity m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++m[e.tail][e.head];
    if (!e.is_loop()) ++m[e.head][e.tail];
  }
  return m;
}

}  // namespace

bool are_isomorphic(const MultiGraph& g1, const MultiGraph& g2) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;

  const Multiplicity m1 = multiplicity_matrix(g1);
  const Multiplicity m2 = multiplicity_matrix(g2);

  std::vector<int> deg1(n), deg2(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg1[v] = g1.degree(v);
    deg2[v] = g2.degree(v);
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  // Assign g1's vertices in BFS order so every step is constrained by an
  // already placed neighbour whenever possible.
  std::vector<std::size_t> order;
  std::vector<char> queued(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = 1;
    order.push_back(root);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      std::size_t v = order[i];
      for (std::size_t e : g1.incidences(v)) {
        std::size_t w = g1.edge(e).other_end(v);
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<std::size_t> image(n, n);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || deg2[cand] != deg1[v] || m2[cand][cand] != m1[v][v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t u = order[k];
        consistent = m1[v][u] == m2[cand][image[u]];
      }
      if (!consistent) continue;
      image[v] = cand;
      used[cand] = 1;
      if (place(depth + 1)) return true;
      used[cand] = 0;
      image[v] = n;
    }
    return false;
  };
  return place(0);
}

}  // namespace dualgraph
