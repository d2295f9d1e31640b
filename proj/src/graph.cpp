#include "uirg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace uirg {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_order(int n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  if (n > kMaxGraphOrder) throw GraphError("graphs are limited to " + std::to_string(kMaxGraphOrder) + " vertices");
}

}  // namespace

SimpleGraph::SimpleGraph(int n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

int SimpleGraph::degree(Vertex v) const { return std::popcount(rows_[v]); }

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (std::uint64_t m = rows_[u] & ~((bit(u) << 1) - 1); m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loops are not allowed");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

void SimpleGraph::toggle_edge(Vertex u, Vertex v) {
  if (has_edge(u, v))
    remove_edge(u, v);
  else
    add_edge(u, v);
}

std::string SimpleGraph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != order()) throw GraphError("one label per vertex required");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
      throw GraphError("vertex labels must be distinct");
  }
  labels_ = std::move(labels);
}

// Builders

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star(int n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph complete_bipartite(int p, int q) {
  SimpleGraph g(p + q);
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = p; v < p + q; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

SimpleGraph copies(int m, const SimpleGraph& g) {
  SimpleGraph out(0);
  for (int i = 0; i < m; ++i) out = disjoint_union(out, g);
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex v : vertices)
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  const int k = static_cast<int>(vertices.size());
  SimpleGraph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v : vertices) labels.push_back(g.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertex_mask) {
  std::vector<Vertex> vs;
  for (std::uint64_t m = vertex_mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
  return induced_subgraph(g, std::move(vs));
}

SimpleGraph line_graph(const SimpleGraph& g) {
  const auto es = g.edges();
  SimpleGraph out(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a, b] = es[i];
      const auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return out;
}

// Isomorphism

namespace {

std::vector<std::vector<int>> neighbour_signatures(const SimpleGraph& g) {
  std::vector<std::vector<int>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> nd;
    for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) nd.push_back(g.degree(std::countr_zero(m)));
    std::sort(nd.begin(), nd.end());
    nd.insert(nd.begin(), g.degree(v));
    sig[v] = std::move(nd);
  }
  return sig;
}

// Vertices in an order that keeps each next vertex adjacent to many placed ones.
std::vector<Vertex> search_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<Vertex> order;
  std::uint64_t placed = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    std::pair<int, int> best_key{-1, -1};
    for (Vertex v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      std::pair<int, int> key{std::popcount(g.neighbors(v) & placed), g.degree(v)};
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

struct IsoSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<std::vector<int>> sig_g, sig_h;
  std::vector<Vertex> order;
  std::vector<Vertex> map;  // g -> h
  std::uint64_t used = 0;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if ((used & bit(w)) || sig_g[v] != sig_h[w]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order[i];
        ok = g.has_edge(v, u) == h.has_edge(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used |= bit(w);
      if (run(depth + 1)) return true;
      used &= ~bit(w);
    }
    map[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence())
    return std::nullopt;
  IsoSearch s{g, h, neighbour_signatures(g), neighbour_signatures(h), search_order(g),
              std::vector<Vertex>(g.order(), -1)};
  auto a = s.sig_g, b = s.sig_h;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

namespace {

struct InducedSearch {
  const SimpleGraph& host;
  const SimpleGraph& pattern;
  std::vector<Vertex> order;
  std::vector<Vertex> image;
  std::uint64_t used = 0;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < host.order(); ++w) {
      if ((used & bit(w)) || host.degree(w) < pattern.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order[i];
        ok = pattern.has_edge(v, u) == host.has_edge(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used |= bit(w);
      if (run(depth + 1)) return true;
      used &= ~bit(w);
    }
    image[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  std::vector<Vertex> order(pattern.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
  InducedSearch s{host, pattern, order, std::vector<Vertex>(pattern.order(), -1)};
  if (!s.run(0)) return std::nullopt;
  return Embedding{s.image};
}

// Enumeration

namespace {

std::vector<int> invariant_key(const SimpleGraph& g) {
  std::vector<int> key{g.order(), g.edge_count()};
  auto sig = neighbour_signatures(g);
  std::sort(sig.begin(), sig.end());
  for (const auto& s : sig) {
    key.push_back(-1);
    key.insert(key.end(), s.begin(), s.end());
  }
  int triangles = 0;
  for (auto [u, v] : g.edges()) triangles += std::popcount(g.neighbors(u) & g.neighbors(v));
  key.push_back(triangles);
  return key;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw GraphError("enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::vector<int>, std::vector<SimpleGraph>> buckets;
    for (const auto& base : level) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
        SimpleGraph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (std::uint64_t m = nbrs; m; m &= m - 1) g.add_edge(k - 1, std::countr_zero(m));
        auto& bucket = buckets[invariant_key(g)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](const SimpleGraph& rep) { return is_isomorphic(rep, g); });
        if (!seen) bucket.push_back(std::move(g));
      }
    }
    level.clear();
    for (auto& [key, bucket] : buckets)
      for (auto& g : bucket) level.push_back(std::move(g));
  }
  std::vector<std::pair<std::pair<int, std::string>, SimpleGraph>> keyed;
  for (auto& g : level) keyed.push_back({{g.edge_count(), to_graph6(g)}, std::move(g)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SimpleGraph> out;
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace uirg
