#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hypergraph.hpp"
#include "rational.hpp"

namespace hyperloose {

struct DensityResult {
  Rational value;
  std::vector<EdgeId> witness;  // edge subset attaining the value
};

namespace detail {

inline void require_density_defined(const Hypergraph& h) {
  require(h.edge_count() >= 2, ErrorKind::undefined, "k-density needs more than k covered vertices");
}

inline bool better(std::int64_t e, std::int64_t v, std::int64_t k, const Rational& best, bool have) {
  if (!have) return true;
  return static_cast<__int128>(e - 1) * best.den() > static_cast<__int128>(best.num()) * (v - k);
}

inline std::vector<std::vector<EdgeId>> line_graph(const Hypergraph& h) {
  std::vector<std::vector<EdgeId>> adj(h.edge_count());
  for (Vertex v = 0; v < h.n(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        adj[inc[a]].push_back(inc[b]);
        adj[inc[b]].push_back(inc[a]);
      }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

}  // namespace detail

// m_k(H) = max (e'-1)/(v'-k) over sub-hypergraphs with v' > k, where v' counts
// the vertices covered by the chosen edges. Only connected edge sets are
// enumerated: a disconnected set is a mediant of its components and of 1/k,
// so the value 1/k covers two disjoint edges and nothing else is lost.
// Throws budget-exceeded after visiting more than budget subsets.
inline DensityResult k_density_detail(const Hypergraph& h, std::uint64_t budget = 50'000'000) {
  detail::require_density_defined(h);
  const auto k = static_cast<std::int64_t>(h.k());
  const std::size_t m = h.edge_count();
  auto adj = detail::line_graph(h);

  DensityResult best;
  bool have = false;
  for (EdgeId a = 0; a < m && !have; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if (!std::binary_search(adj[a].begin(), adj[a].end(), b)) {
        best = {Rational(1, k), {a, b}};
        have = true;
        break;
      }

  std::vector<std::uint32_t> cover(h.n(), 0);
  std::vector<std::uint32_t> near(m, 0);  // members of sub in the closed neighbourhood
  std::vector<EdgeId> sub;
  std::int64_t verts = 0;
  std::uint64_t visited = 0;

  auto add = [&](EdgeId e) {
    sub.push_back(e);
    for (Vertex v : h.edge(e))
      if (cover[v]++ == 0) ++verts;
    ++near[e];
    for (EdgeId f : adj[e]) ++near[f];
  };
  auto remove = [&](EdgeId e) {
    sub.pop_back();
    for (Vertex v : h.edge(e))
      if (--cover[v] == 0) --verts;
    --near[e];
    for (EdgeId f : adj[e]) --near[f];
  };

  std::function<void(std::vector<EdgeId>, EdgeId)> extend = [&](std::vector<EdgeId> ext, EdgeId root) {
    require(++visited <= budget, ErrorKind::budget_exceeded, "k-density enumeration over budget");
    auto e = static_cast<std::int64_t>(sub.size());
    if (e >= 2 && detail::better(e, verts, k, best.value, have)) {
      best = {Rational(e - 1, verts - k), sub};
      have = true;
    }
    while (!ext.empty()) {
      EdgeId w = ext.back();
      ext.pop_back();
      std::vector<EdgeId> next = ext;
      for (EdgeId u : adj[w])
        if (u > root && near[u] == 0) next.push_back(u);
      add(w);
      extend(std::move(next), root);
      remove(w);
    }
  };

  for (EdgeId root = 0; root < m; ++root) {
    add(root);
    std::vector<EdgeId> ext;
    for (EdgeId u : adj[root])
      if (u > root) ext.push_back(u);
    extend(std::move(ext), root);
    remove(root);
  }
  return best;
}

inline Rational k_density(const Hypergraph& h, std::uint64_t budget = 50'000'000) {
  return k_density_detail(h, budget).value;
}

// Every edge subset; for cross-checking on small inputs.
inline Rational k_density_naive(const Hypergraph& h) {
  detail::require_density_defined(h);
  const std::size_t m = h.edge_count();
  require(m <= 24, ErrorKind::budget_exceeded, "naive k-density limited to 24 edges");
  const auto k = static_cast<std::int64_t>(h.k());
  Rational best;
  bool have = false;
  std::vector<char> mark(h.n());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    auto e = static_cast<std::int64_t>(__builtin_popcountll(mask));
    if (e < 2) continue;
    std::fill(mark.begin(), mark.end(), 0);
    std::int64_t v = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1)
        for (Vertex x : h.edge(static_cast<EdgeId>(i)))
          if (!mark[x]) {
            mark[x] = 1;
            ++v;
          }
    if (detail::better(e, v, k, best, have)) {
      best = Rational(e - 1, v - k);
      have = true;
    }
  }
  return best;
}

// Number of cluster-respecting maps i -> V_i carrying every edge of h into g.
inline std::uint64_t canonical_copy_count(const Hypergraph& h, const Hypergraph& g,
                                          const std::vector<VertexList>& clusters) {
  const std::size_t r = h.n();
  require(clusters.size() == r, ErrorKind::invalid_query, "one cluster per vertex of H");
  require(h.k() == g.k(), ErrorKind::invalid_query, "uniformity mismatch");
  detail::part_labels(g.n(), clusters);
  // Edges of h checked when their largest vertex is placed.
  std::vector<std::vector<EdgeId>> closing(r);
  for (EdgeId i = 0; i < h.edge_count(); ++i) closing[h.edge(i).back()].push_back(i);
  VertexList image(r);
  VertexList e(h.k());
  std::uint64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == r) {
      ++count;
      return;
    }
    for (Vertex x : clusters[i]) {
      image[i] = x;
      bool ok = true;
      for (EdgeId f : closing[i]) {
        auto fe = h.edge(f);
        for (std::size_t j = 0; j < fe.size(); ++j) e[j] = image[fe[j]];
        std::sort(e.begin(), e.end());
        if (!g.has_edge(e)) {
          ok = false;
          break;
        }
      }
      if (ok) place(i + 1);
    }
  };
  place(0);
  return count;
}

}  // namespace hyperloose
