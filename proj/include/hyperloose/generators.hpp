#pragma once

#include <algorithm>
#include <vector>

#include "hypergraph.hpp"
#include "random.hpp"

namespace hyperloose {

inline Hypergraph complete(std::size_t n, std::size_t k) {
  std::vector<Vertex> flat;
  flat.reserve(binomial(n, k) * k);
  for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                       [&](std::span<const std::uint32_t> c) { flat.insert(flat.end(), c.begin(), c.end()); });
  return Hypergraph::from_flat(n, k, std::move(flat));
}

// Clique A on {0..n/2-1}, clique B on the rest.
inline Hypergraph two_cliques(std::size_t n, std::size_t k) {
  require(n % 2 == 0, ErrorKind::invalid_query, "two_cliques needs even n");
  const auto h = static_cast<std::uint32_t>(n / 2);
  std::vector<Vertex> flat;
  for (std::uint32_t shift : {0u, h})
    for_each_combination(h, static_cast<std::uint32_t>(k), [&](std::span<const std::uint32_t> c) {
      for (auto v : c) flat.push_back(v + shift);
    });
  return Hypergraph::from_flat(n, k, std::move(flat));
}

// H_k(n,p) as a pure function of (seed, k-set): contains(e) can be asked
// without materializing the graph, and p1 < p2 gives nested edge sets.
struct RandomModel {
  std::size_t n = 0;
  std::size_t k = 3;
  double p = 0.0;
  std::uint64_t seed = 0;

  double draw(std::span<const Vertex> sorted_edge) const { return coupled_uniform(seed, colex_rank(sorted_edge)); }
  bool contains(std::span<const Vertex> sorted_edge) const { return draw(sorted_edge) < p; }

  Hypergraph sample() const {
    require(p >= 0.0 && p <= 1.0, ErrorKind::invalid_query, "p must lie in [0,1]");
    std::vector<Vertex> flat;
    if (p > 0.0)
      for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                           [&](std::span<const std::uint32_t> c) {
                             if (contains(c)) flat.insert(flat.end(), c.begin(), c.end());
                           });
    return Hypergraph::from_flat(n, k, std::move(flat));
  }
};

inline Hypergraph random_hypergraph(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  return RandomModel{n, k, p, seed}.sample();
}

struct BlowUp {
  Hypergraph graph;
  // clusters[v]: the copies of v; a singleton {id} for roots.
  std::vector<VertexList> clusters;
};

// R*(m, X). Vertices are numbered in order of v, roots taking one id and
// every other vertex m consecutive ids, so clusters[v][0] plays v and
// clusters[v][1] its mirror when m = 2.
inline BlowUp blow_up(const Hypergraph& r, std::size_t m, const VertexList& roots) {
  require(m >= 1, ErrorKind::invalid_query, "blow-up factor must be positive");
  std::vector<char> is_root(r.n(), 0);
  for (Vertex x : roots) {
    require(x < r.n(), ErrorKind::invalid_query, "root out of range");
    is_root[x] = 1;
  }
  BlowUp out;
  out.clusters.resize(r.n());
  Vertex next = 0;
  for (Vertex v = 0; v < r.n(); ++v) {
    std::size_t size = is_root[v] ? 1 : m;
    for (std::size_t i = 0; i < size; ++i) out.clusters[v].push_back(next++);
  }
  const std::size_t k = r.k();
  std::vector<Vertex> flat;
  std::vector<std::size_t> idx(k);
  for (EdgeId i = 0; i < r.edge_count(); ++i) {
    auto e = r.edge(i);
    std::fill(idx.begin(), idx.end(), 0);
    bool more = true;
    while (more) {
      for (std::size_t j = 0; j < k; ++j) flat.push_back(out.clusters[e[j]][idx[j]]);
      more = false;
      for (std::size_t j = k; j-- > 0;) {
        if (++idx[j] < out.clusters[e[j]].size()) {
          more = true;
          break;
        }
        idx[j] = 0;
      }
    }
  }
  out.graph = Hypergraph::from_flat(next, k, std::move(flat));
  return out;
}

struct Contraction {
  Hypergraph graph;
  // source[i]: original label of block vertex i. Tuple t became vertex
  // block_vertices + t.
  VertexList source;
  std::size_t block_vertices = 0;
};

// G(F, P): disjoint union of G[U_i], plus a new vertex w_v for each tuple v
// with edge f + w_v whenever f is a (k-1)-subset of U_i and f + v_i in E(G).
inline Contraction contract(const Hypergraph& g, const TupleFamily& f, const BlockPartition& p) {
  const std::size_t k = g.k();
  require(k >= 2, ErrorKind::invalid_query, "contraction needs k >= 2");
  auto block_of = detail::part_labels(g.n(), p.blocks);
  for (auto& b : p.blocks) require(!b.empty(), ErrorKind::invalid_query, "empty block");
  std::vector<char> in_tuple(g.n(), 0);
  for (auto& t : f.tuples) {
    require(t.size() == f.ell && f.ell == p.blocks.size(), ErrorKind::invalid_query,
            "tuple length must equal the number of blocks");
    for (Vertex v : t) {
      require(v < g.n(), ErrorKind::invalid_query, "tuple vertex out of range");
      require(!in_tuple[v], ErrorKind::invalid_query, "tuples overlap");
      require(block_of[v] < 0, ErrorKind::invalid_query, "tuple meets a block");
      in_tuple[v] = 1;
    }
  }
  Contraction out;
  std::vector<Vertex> id(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (block_of[v] >= 0) {
      id[v] = static_cast<Vertex>(out.source.size());
      out.source.push_back(v);
    }
  out.block_vertices = out.source.size();
  std::vector<Vertex> flat;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    int b = block_of[e[0]];
    if (b >= 0 && std::all_of(e.begin(), e.end(), [&](Vertex v) { return block_of[v] == b; }))
      for (Vertex v : e) flat.push_back(id[v]);
  }
  for (std::size_t t = 0; t < f.tuples.size(); ++t) {
    Vertex w = static_cast<Vertex>(out.block_vertices + t);
    for (std::size_t i = 0; i < f.ell; ++i) {
      Vertex vi = f.tuples[t][i];
      for (EdgeId e : g.incident(vi)) {
        bool ok = true;
        for (Vertex v : g.edge(e))
          if (v != vi && block_of[v] != static_cast<int>(i)) ok = false;
        if (!ok) continue;
        for (Vertex v : g.edge(e))
          if (v != vi) flat.push_back(id[v]);
        flat.push_back(w);
      }
    }
  }
  out.graph = Hypergraph::from_flat(out.block_vertices + f.tuples.size(), k, std::move(flat));
  return out;
}

}  // namespace hyperloose
