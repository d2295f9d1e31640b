#include "uirg/line_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace uirg {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::vector<Vertex> to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// Bron-Kerbosch with pivoting over bit rows.
void maximal_cliques(const SimpleGraph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                     std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const std::uint64_t px = p | x;
  Vertex pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    const Vertex u = std::countr_zero(m);
    const int c = std::popcount(p & g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t m = p & ~g.neighbors(pivot); m; m &= m - 1) {
    const Vertex v = std::countr_zero(m);
    maximal_cliques(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

class KrauszSearch {
 public:
  explicit KrauszSearch(const SimpleGraph& g) : g_(g) {}

  std::optional<KrauszPartition> run() {
    State s;
    s.uncovered.resize(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) s.uncovered[v] = g_.neighbors(v);
    s.count.assign(g_.order(), 0);
    if (!search(s)) return std::nullopt;
    KrauszPartition out;
    for (auto mask : solution_) out.cliques.push_back(to_vertices(mask));
    return out;
  }

 private:
  struct State {
    std::vector<std::uint64_t> uncovered;
    std::vector<int> count;
    std::vector<std::uint64_t> cliques;
  };

  static bool fits(const State& s, std::uint64_t clique) {
    for (std::uint64_t m = clique; m; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      if (s.count[v] >= 2) return false;
      const std::uint64_t others = clique & ~bit(v);
      if ((others & ~s.uncovered[v]) != 0) return false;
    }
    return true;
  }

  static void apply(State& s, std::uint64_t clique) {
    for (std::uint64_t m = clique; m; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      s.uncovered[v] &= ~clique;
      ++s.count[v];
    }
    s.cliques.push_back(clique);
  }

  // A vertex already in one clique must put all its remaining edges into a second one.
  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (s.uncovered[v] == 0 || s.count[v] == 0) continue;
        if (s.count[v] >= 2) return false;
        const std::uint64_t forced = s.uncovered[v] | bit(v);
        if (!fits(s, forced)) return false;
        apply(s, forced);
        changed = true;
      }
    }
    return true;
  }

  bool search(State& s) {
    if (!propagate(s)) return false;
    Vertex u = -1;
    for (Vertex v = 0; v < g_.order() && u < 0; ++v)
      if (s.uncovered[v]) u = v;
    if (u < 0) {
      solution_ = s.cliques;
      return true;
    }
    const Vertex v = std::countr_zero(s.uncovered[u]);

    std::vector<std::uint64_t> cores;
    maximal_cliques(g_, 0, g_.neighbors(u) & g_.neighbors(v), 0, cores);
    std::vector<std::uint64_t> candidates;
    for (auto core : cores) {
      if (core == 0) continue;
      const std::uint64_t clique = core | bit(u) | bit(v);
      if (fits(s, clique)) candidates.push_back(clique);
    }
    std::sort(candidates.begin(), candidates.end(), [](std::uint64_t a, std::uint64_t b) {
      const int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca > cb : a < b;
    });
    candidates.push_back(bit(u) | bit(v));

    for (auto clique : candidates) {
      State next = s;
      apply(next, clique);
      if (search(next)) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<std::uint64_t> solution_;
};

}  // namespace

bool is_valid_krausz_partition(const SimpleGraph& g, const KrauszPartition& p) {
  std::vector<int> count(g.order(), 0);
  SimpleGraph covered(g.order());
  for (const auto& clique : p.cliques) {
    if (clique.size() < 2) return false;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const Vertex a = clique[i];
      if (a < 0 || a >= g.order()) return false;
      if (++count[a] > 2) return false;
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const Vertex b = clique[j];
        if (a == b || !g.has_edge(a, b) || covered.has_edge(a, b)) return false;
        covered.add_edge(a, b);
      }
    }
  }
  return covered.same_edges(g);
}

std::optional<KrauszPartition> krausz_partition(const SimpleGraph& g) { return KrauszSearch(g).run(); }

std::optional<SimpleGraph> root_graph(const SimpleGraph& g) {
  const auto partition = krausz_partition(g);
  if (!partition) return std::nullopt;
  const int k = static_cast<int>(partition->cliques.size());
  std::vector<std::vector<int>> membership(g.order());
  for (int c = 0; c < k; ++c)
    for (Vertex v : partition->cliques[c]) membership[v].push_back(c);

  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = k;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& m = membership[v];
    if (m.size() == 2) {
      edges.emplace_back(m[0], m[1]);
    } else if (m.size() == 1) {
      edges.emplace_back(m[0], next++);
    } else {
      edges.emplace_back(next, next + 1);
      next += 2;
    }
  }
  if (next > kMaxGraphOrder) throw GraphError("root graph would exceed " + std::to_string(kMaxGraphOrder) + " vertices");
  SimpleGraph root(next, edges);
  if (!is_isomorphic(line_graph(root), g))
    throw std::logic_error("reconstructed root does not reproduce the input graph");
  return root;
}

bool free_of(const SimpleGraph& g, std::span<const SimpleGraph> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const SimpleGraph& p) { return contains_induced(g, p).has_value(); });
}

bool is_line_graph_by_forbidden(const SimpleGraph& g) { return free_of(g, beineke_graphs().graphs); }

bool is_complement_of_line_graph_by_forbidden(const SimpleGraph& g) {
  static const std::vector<SimpleGraph> complements = [] {
    std::vector<SimpleGraph> out;
    for (const auto& f : beineke_graphs().graphs) out.push_back(complement(f));
    return out;
  }();
  return free_of(g, complements);
}

bool is_line_graph(const SimpleGraph& g) {
  const bool verdict = krausz_partition(g).has_value();
#ifdef UIRG_VALIDATE
  if (verdict != is_line_graph_by_forbidden(g))
    throw std::logic_error("Krausz search and forbidden-subgraph filter disagree on " + to_graph6(g));
#endif
  return verdict;
}

bool is_complement_of_line_graph(const SimpleGraph& g) {
  const bool verdict = is_line_graph(complement(g));
#ifdef UIRG_VALIDATE
  if (verdict != is_complement_of_line_graph_by_forbidden(g))
    throw std::logic_error("complemented forbidden filter disagrees on " + to_graph6(g));
#endif
  return verdict;
}

ForbiddenSet minimal_forbidden_line(int max_vertices) {
  if (max_vertices < 0 || max_vertices > kMaxEnumerationOrder)
    throw GraphError("forbidden-set derivation is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  ForbiddenSet out;
  out.max_vertices = max_vertices;
  for (int n = 1; n <= max_vertices; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (krausz_partition(g)) continue;
      bool minimal = true;
      for (Vertex v = 0; v < n && minimal; ++v) {
        std::vector<Vertex> rest;
        for (Vertex w = 0; w < n; ++w)
          if (w != v) rest.push_back(w);
        minimal = krausz_partition(induced_subgraph(g, rest)).has_value();
      }
      if (minimal) out.graphs.push_back(g);
    }
  }
  return out;
}

const ForbiddenSet& beineke_graphs() {
  static const ForbiddenSet set = minimal_forbidden_line(6);
  return set;
}

}  // namespace uirg
