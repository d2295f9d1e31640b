#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uirg/graph.hpp"

namespace uirg {

/// Edge partition into cliques with every vertex in at most two of them.
/// Isolated vertices belong to no clique.
struct KrauszPartition {
  std::vector<std::vector<Vertex>> cliques;
};

/// Checks every partition invariant against the host graph.
bool is_valid_krausz_partition(const SimpleGraph& g, const KrauszPartition& p);

/// Backtracking search; cliques of size >= 3 are drawn from the maximal cliques,
/// largest first, and single edges are tried last.
std::optional<KrauszPartition> krausz_partition(const SimpleGraph& g);

/// H with L(H) isomorphic to g, built from a Krausz partition and verified.
std::optional<SimpleGraph> root_graph(const SimpleGraph& g);

bool is_line_graph(const SimpleGraph& g);
bool is_complement_of_line_graph(const SimpleGraph& g);

/// Minimal non-line graphs under vertex deletion.
struct ForbiddenSet {
  std::vector<SimpleGraph> graphs;
  int max_vertices = 0;
};

/// Every graph on <= max_vertices vertices that is not a line graph while all of
/// its one-vertex deletions are, sorted by (vertices, edges, graph6).
ForbiddenSet minimal_forbidden_line(int max_vertices);

/// The forbidden set on <= 6 vertices, derived once per process.
const ForbiddenSet& beineke_graphs();

/// True when no pattern occurs as an induced subgraph of g.
bool free_of(const SimpleGraph& g, std::span<const SimpleGraph> patterns);

/// Line-graph decision by the forbidden-subgraph filter.
bool is_line_graph_by_forbidden(const SimpleGraph& g);
/// Complement-of-line-graph decision using the complemented forbidden set directly on g.
bool is_complement_of_line_graph_by_forbidden(const SimpleGraph& g);

}  // namespace uirg
