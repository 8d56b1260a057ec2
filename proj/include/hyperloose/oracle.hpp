#pragma once

#include "loose.hpp"
#include "search.hpp"

namespace hyperloose {

namespace detail {

inline std::vector<char> all_but(std::size_t n, const VertexList& excluded) {
  std::vector<char> a(n, 1);
  for (Vertex v : excluded) a[v] = 0;
  return a;
}

}  // namespace detail

// Hamilton cycles whose first window is `first` (ordered: first.front() and
// first.back() are the joints). Spanning search over the remaining vertices.
inline SearchResult<LooseCycle> hamilton_cycle_from(const Hypergraph& g, const VertexList& first, std::uint64_t budget) {
  require(first.size() == g.k() && g.has_edge_unsorted(first), ErrorKind::invalid_query, "first window is not an edge");
  PathQuery q;
  q.g = &g;
  q.prefix = first;
  q.end = first.front();
  q.cycle = true;
  q.allowed = detail::all_but(g.n(), first);
  q.spanning = true;
  q.budget = budget;
  auto r = search_path(q);
  SearchResult<LooseCycle> out{r.status, std::nullopt, r.nodes};
  if (r.value) out.value = LooseCycle{g.k(), *r.value};
  return out;
}

// Exhaustive search for a loose Hamilton cycle. Every cycle has a window
// containing vertex 0 that can be oriented so its start joint is smaller than
// its end joint, so only those first windows are tried.
inline SearchResult<LooseCycle> hamilton_oracle(const Hypergraph& g, std::uint64_t budget = 10'000'000) {
  const std::size_t n = g.n(), k = g.k();
  require(k >= 2, ErrorKind::invalid_query, "uniformity below 2");
  require(n % (k - 1) == 0, ErrorKind::invalid_query, "n divisible by k-1 required");
  SearchResult<LooseCycle> out;
  if (n / (k - 1) < 3) return out;
  for (Vertex v = 0; v < n; ++v)
    if (g.vertex_degree(v) == 0) return out;
  std::uint64_t spent = 0;
  for (EdgeId e : g.incident(0)) {
    auto ev = g.edge(e);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        VertexList first{ev[i]};
        for (std::size_t t = 0; t < k; ++t)
          if (t != i && t != j) first.push_back(ev[t]);
        first.push_back(ev[j]);
        if (spent >= budget) return {SearchStatus::unknown, std::nullopt, spent};
        auto r = hamilton_cycle_from(g, first, budget - spent);
        spent += r.nodes;
        if (r.status != SearchStatus::none) {
          r.nodes = spent;
          return r;
        }
      }
  }
  out.nodes = spent;
  return out;
}

inline SearchResult<LoosePath> hamilton_path_oracle(const Hypergraph& g, Vertex u, Vertex v,
                                                    std::uint64_t budget = 10'000'000) {
  const std::size_t n = g.n(), k = g.k();
  require(k >= 2, ErrorKind::invalid_query, "uniformity below 2");
  require(u != v && u < n && v < n, ErrorKind::invalid_query, "endpoints must be distinct vertices");
  require((n - 1) % (k - 1) == 0, ErrorKind::invalid_query, "n-1 divisible by k-1 required");
  PathQuery q;
  q.g = &g;
  q.prefix = {u};
  q.end = v;
  q.allowed = detail::all_but(n, {u, v});
  q.spanning = true;
  q.budget = budget;
  auto r = search_path(q);
  SearchResult<LoosePath> out{r.status, std::nullopt, r.nodes};
  if (r.value) out.value = LoosePath{k, *r.value};
  return out;
}

// Spanning (u,v)-path through exactly the vertices of `within` (plus u, v).
inline SearchResult<LoosePath> spanning_path_within(const Hypergraph& g, Vertex u, Vertex v, const VertexList& within,
                                                    std::uint64_t budget) {
  PathQuery q;
  q.g = &g;
  q.prefix = {u};
  q.end = v;
  q.allowed.assign(g.n(), 0);
  for (Vertex x : within) q.allowed[x] = 1;
  q.allowed[u] = q.allowed[v] = 0;
  q.spanning = true;
  q.budget = budget;
  auto r = search_path(q);
  SearchResult<LoosePath> out{r.status, std::nullopt, r.nodes};
  if (r.value) out.value = LoosePath{g.k(), *r.value};
  return out;
}

}  // namespace hyperloose
