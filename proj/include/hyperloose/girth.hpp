#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "hypergraph.hpp"

namespace hyperloose {

// Non-uniform edge family; used for absorbers together with their root edge.
struct EdgeSequenceGraph {
  std::size_t n = 0;
  std::vector<VertexList> edges;

  // Sorts each edge and drops repeats.
  static EdgeSequenceGraph from_edges(std::vector<VertexList> edges) {
    EdgeSequenceGraph h;
    for (auto& e : edges) {
      e = sorted_unique(std::move(e));
      require(e.size() >= 2, ErrorKind::invalid_query, "edge with fewer than two vertices");
      if (!e.empty()) h.n = std::max<std::size_t>(h.n, e.back() + 1);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges = std::move(edges);
    return h;
  }
};

// Length of a shortest cycle; nullopt means acyclic ("unbounded").
struct Girth {
  std::optional<std::size_t> length;

  bool infinite() const { return !length.has_value(); }
  bool at_least(std::size_t bound) const { return !length || *length >= bound; }
  friend bool operator==(const Girth&, const Girth&) = default;
};

struct BergeCycle {
  std::vector<std::size_t> edges;  // indices into EdgeSequenceGraph::edges
  VertexList links;                // links[i] lies in edges[i] and edges[i+1]
};

namespace detail {

// Shortest cycle of a simple graph given as adjacency lists, BFS from each root
// in roots. Returns the node sequence of one shortest cycle.
inline std::optional<std::vector<std::size_t>> shortest_cycle(const std::vector<std::vector<std::size_t>>& adj,
                                                              const std::vector<std::size_t>& roots) {
  const std::size_t n = adj.size();
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> best_cycle;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root : roots) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[root] = 0;
    parent[root] = SIZE_MAX;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;
      for (std::size_t w : adj[u]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (len < best) {
            std::vector<std::size_t> a, b;
            for (std::size_t x = u; x != SIZE_MAX; x = parent[x]) a.push_back(x);
            for (std::size_t x = w; x != SIZE_MAX; x = parent[x]) b.push_back(x);
            // Only accept simple cycles: the two tree paths meet only at root.
            std::vector<std::size_t> sa(a.begin(), a.end() - 1), sb(b.begin(), b.end() - 1);
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            std::vector<std::size_t> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
            if (!common.empty()) continue;
            best = len;
            best_cycle.assign(a.rbegin(), a.rend());
            best_cycle.insert(best_cycle.end(), b.begin(), b.end() - 1);
          }
        }
      }
    }
  }
  if (best == SIZE_MAX) return std::nullopt;
  return best_cycle;
}

}  // namespace detail

// Berge cycles of length l correspond to cycles of length 2l in the
// vertex-edge incidence graph, so a BFS girth there is exact.
inline std::optional<BergeCycle> shortest_berge_cycle(const EdgeSequenceGraph& h) {
  const std::size_t m = h.edges.size();
  std::size_t n = h.n;
  for (auto& e : h.edges)
    for (Vertex v : e) n = std::max<std::size_t>(n, v + 1);
  std::vector<std::vector<std::size_t>> adj(n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : h.edges[i]) {
      adj[n + i].push_back(v);
      adj[v].push_back(n + i);
    }
  std::vector<std::size_t> roots(m);
  for (std::size_t i = 0; i < m; ++i) roots[i] = n + i;
  auto cyc = detail::shortest_cycle(adj, roots);
  if (!cyc) return std::nullopt;
  // Rotate so the sequence starts at an edge node.
  auto& c = *cyc;
  if (c[0] < n) std::rotate(c.begin(), c.begin() + 1, c.end());
  BergeCycle out;
  for (std::size_t i = 0; i < c.size(); i += 2) {
    out.edges.push_back(c[i] - n);
    out.links.push_back(static_cast<Vertex>(c[i + 1]));
  }
  return out;
}

inline Girth berge_girth(const EdgeSequenceGraph& h) {
  auto c = shortest_berge_cycle(h);
  if (!c) return {};
  return {c->edges.size()};
}

inline EdgeSequenceGraph as_edge_sequence(const Hypergraph& g) {
  return EdgeSequenceGraph::from_edges(g.edge_list());
}

// Girth of a 2-graph with possible parallel edges (which count as 2-cycles).
inline Girth graph_girth(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [a, b] : edges) {
    require(a != b, ErrorKind::invalid_query, "loop in graph");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return {2};
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = i;
  auto c = detail::shortest_cycle(adj, roots);
  if (!c) return {};
  return {c->size()};
}

}  // namespace hyperloose
