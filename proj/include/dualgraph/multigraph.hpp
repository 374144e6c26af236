// Finite undirected multigraphs with loops and parallel edges, as used for
// dual graphs of semistable special fibers: vertices are the geometric
// components, edges are the nodes.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dualgraph {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge stores a fixed orientation (tail -> head). The orientation carries
// no meaning for the undirected graph itself; it is the reference frame for
// subdivision positions and for telling whether an automorphism reverses
// the edge.
struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_loop() const { return tail == head; }
  std::size_t other_end(std::size_t v) const { return v == tail ? head : tail; }
};

class MultiGraph {
 public:
  // Throws GraphError on an empty vertex set, duplicate identifiers or
  // out-of-range endpoints.
  MultiGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertex_ids_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;

  // Edge-endpoint incidences at v; a loop contributes 2.
  int degree(std::size_t v) const;
  int degree(const std::string& id) const;

  // Edge indices incident to v. A loop appears twice.
  const std::vector<std::size_t>& incidences(std::size_t v) const { return incidence_.at(v); }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::vector<std::vector<std::size_t>> incidence_;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.id == b.id && a.tail == b.tail && a.head == b.head;
}

// Incremental construction by identifier.
class GraphBuilder {
 public:
  std::size_t add_vertex(std::string id);
  std::size_t add_edge(std::string id, std::size_t tail, std::size_t head);
  std::size_t add_edge(std::string id, const std::string& tail, const std::string& head);

  std::size_t vertex_count() const { return vertices_.size(); }
  MultiGraph build() const { return MultiGraph(vertices_, edges_); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

long euler_characteristic(const MultiGraph& g);

// 1 - chi. Throws GraphError when g is disconnected.
long arithmetic_genus(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

int max_degree(const MultiGraph& g);

// Where an internal vertex of a subdivided edge sits: position 1..e-1,
// counted from the parent edge's tail.
struct ChainPosition {
  std::size_t parent_edge = 0;
  int position = 0;

  friend bool operator==(const ChainPosition&, const ChainPosition&) = default;
};

struct Subdivision {
  MultiGraph graph;
  int segments = 1;
  // Indexed by vertex of `graph`; empty for original vertices.
  std::vector<std::optional<ChainPosition>> provenance;
  std::size_t original_vertex_count = 0;

  // Vertex index of position p (0..segments) along original edge `edge`.
  std::size_t chain_vertex(const MultiGraph& original, std::size_t edge, int p) const;
  // Edge index of segment k (0..segments-1) of original edge `edge`,
  // joining position k to position k+1.
  std::size_t chain_segment(std::size_t edge, int k) const;
};

// Replaces every edge by a path of e edges through e-1 new vertices named
// "<edge id>/<position>"; segments are named "<edge id>#<k>". Original
// vertices keep their indices and identifiers. e == 1 returns a copy.
Subdivision subdivide(const MultiGraph& g, int e);

// True iff some vertex bijection carries the edge multiset of g1 onto that
// of g2 (loops and multiplicities respected). Backtracking; meant for small
// graphs.
bool are_isomorphic(const MultiGraph& g1, const MultiGraph& g2);

}  // namespace dualgraph
