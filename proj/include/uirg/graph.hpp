#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uirg {

using Vertex = int;

inline constexpr int kMaxGraphOrder = 64;
inline constexpr int kMaxEnumerationOrder = 7;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite undirected simple graph on at most 64 vertices, one adjacency bit row per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int order() const { return static_cast<int>(rows_.size()); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const;
  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its index when unlabelled.
  std::string label(Vertex v) const;
  void set_labels(std::vector<std::string> labels);

  /// Structural equality (labels ignored).
  bool same_edges(const SimpleGraph& other) const { return rows_ == other.rows_; }
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

// Builders

SimpleGraph complete(int n);
SimpleGraph path(int n);
SimpleGraph cycle(int n);
/// Star on n vertices: vertex 0 joined to the n - 1 others.
SimpleGraph star(int n);
SimpleGraph complete_bipartite(int p, int q);
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph copies(int m, const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);
/// Restriction to `vertices`, re-indexed in increasing original order.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<Vertex> vertices);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertex_mask);
/// Vertices are the edges of g in lexicographic order.
SimpleGraph line_graph(const SimpleGraph& g);

/// Vertex bijection g -> h preserving adjacency and non-adjacency.
std::optional<std::vector<Vertex>> isomorphism(const SimpleGraph& g, const SimpleGraph& h);
inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) { return isomorphism(g, h).has_value(); }

/// Host vertex for each pattern vertex of an induced copy.
struct Embedding {
  std::vector<Vertex> image;
};

std::optional<Embedding> contains_induced(const SimpleGraph& host, const SimpleGraph& pattern);

/// One representative per isomorphism class on n vertices, sorted by (edges, graph6).
std::vector<SimpleGraph> enumerate_graphs(int n);

// Serialization

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(const std::string& text);
std::string to_dot(const SimpleGraph& g, const std::string& name = "G");
/// {"edges": [[u,v],...], "labels": [...], "n": n} with sorted keys.
std::string to_json(const SimpleGraph& g);
SimpleGraph from_json(const std::string& text);

}  // namespace uirg
