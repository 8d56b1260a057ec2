#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace hyperloose {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using EdgeId = std::uint32_t;

inline VertexList sorted_unique(VertexList v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// k-uniform hypergraph on {0..n-1}. Edges are kept sorted (each edge ascending,
// edge list lexicographic) in one flat array; incidence lists are built once.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::size_t k) : n_(n), k_(k) {
    require(k >= 1, ErrorKind::invalid_query, "uniformity must be positive");
    build_incidence();
  }

  // Throws on malformed or duplicate edges.
  Hypergraph(std::size_t n, std::size_t k, std::vector<VertexList> edges) : n_(n), k_(k) {
    require(k >= 1, ErrorKind::invalid_query, "uniformity must be positive");
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      require(e.size() == k, ErrorKind::invalid_query, "edge of wrong size");
      for (std::size_t j = 0; j < k; ++j) {
        require(e[j] < n, ErrorKind::invalid_query, "edge vertex out of range");
        require(j == 0 || e[j] != e[j - 1], ErrorKind::invalid_query, "edge with repeated vertex");
      }
      require(i == 0 || edges[i - 1] != e, ErrorKind::invalid_query, "duplicate edge");
      flat_.insert(flat_.end(), e.begin(), e.end());
    }
    build_incidence();
  }

  // Accepts unsorted edges with possible duplicates; used by generators.
  static Hypergraph from_flat(std::size_t n, std::size_t k, std::vector<Vertex> flat) {
    std::size_t m = k == 0 ? 0 : flat.size() / k;
    std::vector<std::uint32_t> order(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::sort(flat.begin() + i * k, flat.begin() + (i + 1) * k);
      order[i] = static_cast<std::uint32_t>(i);
    }
    auto less = [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(flat.begin() + a * k, flat.begin() + (a + 1) * k, flat.begin() + b * k,
                                          flat.begin() + (b + 1) * k);
    };
    std::sort(order.begin(), order.end(), less);
    Hypergraph g;
    g.n_ = n;
    g.k_ = k;
    g.flat_.reserve(flat.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0 && !less(order[i - 1], order[i])) continue;
      g.flat_.insert(g.flat_.end(), flat.begin() + order[i] * k, flat.begin() + (order[i] + 1) * k);
    }
    g.build_incidence();
    return g;
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t edge_count() const { return k_ == 0 ? 0 : flat_.size() / k_; }

  std::span<const Vertex> edge(EdgeId i) const { return {flat_.data() + static_cast<std::size_t>(i) * k_, k_}; }
  std::span<const EdgeId> incident(Vertex v) const {
    return {inc_.data() + inc_off_[v], inc_off_[v + 1] - inc_off_[v]};
  }
  std::size_t vertex_degree(Vertex v) const { return inc_off_[v + 1] - inc_off_[v]; }

  std::vector<VertexList> edge_list() const {
    std::vector<VertexList> out;
    out.reserve(edge_count());
    for (EdgeId i = 0; i < edge_count(); ++i) out.emplace_back(edge(i).begin(), edge(i).end());
    return out;
  }

  // e must be sorted.
  bool has_edge(std::span<const Vertex> e) const {
    if (e.size() != k_) return false;
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto f = edge(static_cast<EdgeId>(mid));
      if (std::lexicographical_compare(f.begin(), f.end(), e.begin(), e.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < edge_count() && std::equal(e.begin(), e.end(), edge(static_cast<EdgeId>(lo)).begin());
  }

  bool has_edge_unsorted(VertexList e) const {
    std::sort(e.begin(), e.end());
    return has_edge(e);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
  }

 private:
  void build_incidence() {
    inc_off_.assign(n_ + 2, 0);
    for (Vertex v : flat_) ++inc_off_[v + 1];
    for (std::size_t i = 1; i < inc_off_.size(); ++i) inc_off_[i] += inc_off_[i - 1];
    inc_.assign(flat_.size(), 0);
    std::vector<std::size_t> fill(inc_off_.begin(), inc_off_.end() - 1);
    for (std::size_t i = 0; i < flat_.size(); ++i) inc_[fill[flat_[i]]++] = static_cast<EdgeId>(i / k_);
  }

  std::size_t n_ = 0;
  std::size_t k_ = 2;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> inc_off_{0, 0};
  std::vector<EdgeId> inc_;
};

// Ordered l-tuples, pairwise vertex-disjoint.
struct TupleFamily {
  std::size_t ell = 0;
  std::vector<VertexList> tuples;
};

struct BlockPartition {
  std::vector<VertexList> blocks;
};

namespace detail {

inline VertexList checked_set(const Hypergraph& g, VertexList s) {
  s = sorted_unique(std::move(s));
  for (Vertex v : s) require(v < g.n(), ErrorKind::invalid_query, "vertex out of range");
  return s;
}

inline std::vector<int> part_labels(std::size_t n, const std::vector<VertexList>& parts) {
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) {
      require(v < n, ErrorKind::invalid_query, "vertex out of range");
      require(label[v] == -1 || label[v] == static_cast<int>(i), ErrorKind::invalid_query, "parts overlap");
      label[v] = static_cast<int>(i);
    }
  return label;
}

}  // namespace detail

// Number of edges containing S.
inline std::size_t degree(const Hypergraph& g, VertexList s) {
  s = detail::checked_set(g, std::move(s));
  require(s.size() <= g.k(), ErrorKind::invalid_query, "set larger than uniformity");
  if (s.empty()) return g.edge_count();
  Vertex pivot = *std::min_element(s.begin(), s.end(),
                                   [&](Vertex a, Vertex b) { return g.vertex_degree(a) < g.vertex_degree(b); });
  std::size_t count = 0;
  for (EdgeId e : g.incident(pivot))
    if (is_subset(s, g.edge(e))) ++count;
  return count;
}

// delta_d: counts every d-subset of every edge, so it runs in O(e * C(k,d)).
inline std::size_t min_d_degree(const Hypergraph& g, std::size_t d) {
  require(d >= 1 && d + 1 <= g.k(), ErrorKind::invalid_query, "d must lie in [1, k-1]");
  require(g.n() >= d, ErrorKind::invalid_query, "fewer than d vertices");
  std::uint64_t total = binomial(g.n(), d);
  std::unordered_map<std::uint64_t, std::size_t> counts;
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    for_each_subset_of<Vertex>(g.edge(i), static_cast<std::uint32_t>(d),
                               [&](std::span<const Vertex> s) { ++counts[colex_rank(s)]; });
  if (counts.size() < total) return 0;
  std::size_t best = SIZE_MAX;
  for (auto& [key, c] : counts) best = std::min(best, c);
  return best;
}

// Link of x, kept on the same vertex labels; x itself is left isolated.
inline Hypergraph link_graph(const Hypergraph& g, Vertex x) {
  require(x < g.n(), ErrorKind::invalid_query, "vertex out of range");
  require(g.k() >= 2, ErrorKind::invalid_query, "link of a 1-graph");
  std::vector<Vertex> flat;
  for (EdgeId e : g.incident(x))
    for (Vertex v : g.edge(e))
      if (v != x) flat.push_back(v);
  return Hypergraph::from_flat(g.n(), g.k() - 1, std::move(flat));
}

// Z_G(S, X): edges containing S that meet X \ S.
inline std::size_t z_count(const Hypergraph& g, VertexList s, VertexList x) {
  s = detail::checked_set(g, std::move(s));
  x = detail::checked_set(g, std::move(x));
  VertexList rest;
  std::set_difference(x.begin(), x.end(), s.begin(), s.end(), std::back_inserter(rest));
  if (rest.empty()) return 0;
  std::size_t count = 0;
  auto meets = [&](std::span<const Vertex> e) {
    for (Vertex v : e)
      if (std::binary_search(rest.begin(), rest.end(), v)) return true;
    return false;
  };
  if (s.empty()) {
    for (EdgeId i = 0; i < g.edge_count(); ++i) count += meets(g.edge(i));
    return count;
  }
  for (EdgeId e : g.incident(s.front()))
    if (is_subset(s, g.edge(e)) && meets(g.edge(e))) ++count;
  return count;
}

// d(X_1..X_k) = e(X_1..X_k) / prod |X_i|.
inline Rational cross_density(const Hypergraph& g, const std::vector<VertexList>& parts) {
  require(parts.size() == g.k(), ErrorKind::invalid_query, "need exactly k parts");
  std::int64_t denom = 1;
  for (auto& p : parts) {
    require(!p.empty(), ErrorKind::invalid_query, "empty part");
    denom *= static_cast<std::int64_t>(sorted_unique(p).size());
  }
  auto label = detail::part_labels(g.n(), parts);
  std::int64_t count = 0;
  std::vector<char> seen(g.k());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (Vertex v : g.edge(i)) {
      int l = label[v];
      if (l < 0 || seen[l]) {
        ok = false;
        break;
      }
      seen[l] = 1;
    }
    count += ok;
  }
  return Rational(count, denom);
}

// Z(M; U_1..U_k): transversal edges whose last two vertices form a pair of M.
inline std::size_t pair_restricted_count(const Hypergraph& g, const std::vector<VertexList>& u,
                                         const std::vector<std::pair<Vertex, Vertex>>& m) {
  const std::size_t k = g.k();
  require(u.size() == k && k >= 2, ErrorKind::invalid_query, "need exactly k parts");
  auto label = detail::part_labels(g.n(), u);
  std::vector<std::uint64_t> keys;
  for (auto [a, b] : m) {
    require(a < g.n() && b < g.n() && label[a] == static_cast<int>(k - 2) && label[b] == static_cast<int>(k - 1),
            ErrorKind::invalid_query, "pair outside U_{k-1} x U_k");
    keys.push_back((static_cast<std::uint64_t>(a) << 32) | b);
  }
  std::sort(keys.begin(), keys.end());
  std::size_t count = 0;
  std::vector<Vertex> slot(k);
  std::vector<char> seen(k);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (Vertex v : g.edge(i)) {
      int l = label[v];
      if (l < 0 || seen[l]) {
        ok = false;
        break;
      }
      seen[l] = 1;
      slot[l] = v;
    }
    if (ok && std::binary_search(keys.begin(), keys.end(), (static_cast<std::uint64_t>(slot[k - 2]) << 32) | slot[k - 1]))
      ++count;
  }
  return count;
}

inline Hypergraph induced(const Hypergraph& g, const VertexList& keep) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<Vertex> flat;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) flat.insert(flat.end(), e.begin(), e.end());
  }
  return Hypergraph::from_flat(g.n(), g.k(), std::move(flat));
}

// Relabels the vertices of keep (taken in the given order) to 0..|keep|-1.
inline Hypergraph induced_relabel(const Hypergraph& g, const VertexList& keep) {
  std::vector<std::int64_t> id(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Vertex> flat;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return id[v] >= 0; }))
      for (Vertex v : e) flat.push_back(static_cast<Vertex>(id[v]));
  }
  return Hypergraph::from_flat(keep.size(), g.k(), std::move(flat));
}

inline Hypergraph with_edges_removed(const Hypergraph& g, const std::vector<char>& removed) {
  std::vector<Vertex> flat;
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    if (!removed[i]) flat.insert(flat.end(), g.edge(i).begin(), g.edge(i).end());
  return Hypergraph::from_flat(g.n(), g.k(), std::move(flat));
}

}  // namespace hyperloose
