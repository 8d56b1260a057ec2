#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "loose.hpp"
#include "search.hpp"

namespace hyperloose {

inline std::size_t dense_connect_order(std::size_t k) { return 4 * (k - 1) + 1; }
inline std::size_t reservoir_connect_order(std::size_t k) { return 8 * (k - 1) + 1; }

namespace detail {

inline LoosePath connect_within(const Hypergraph& g, Vertex u, Vertex v, std::vector<char> allowed, std::size_t order,
                                std::uint64_t budget, const char* what) {
  const std::size_t k = g.k();
  require(u != v && u < g.n() && v < g.n(), ErrorKind::invalid_query, "endpoints must be distinct vertices");
  require(order >= k && (order - 1) % (k - 1) == 0, ErrorKind::invalid_query, "path order must be 1 mod k-1");
  allowed[u] = allowed[v] = 0;
  PathQuery q;
  q.g = &g;
  q.prefix = {u};
  q.end = v;
  q.allowed = std::move(allowed);
  q.exact_order = order;
  q.budget = budget;
  auto r = search_path(q);
  if (!r.found())
    fail(ErrorKind::not_found, std::string(what) + ": no loose (" + std::to_string(u) + "," + std::to_string(v) +
                                   ")-path of order " + std::to_string(order) +
                                   (r.status == SearchStatus::unknown ? " within budget" : ""));
  return LoosePath{k, *r.value};
}

}  // namespace detail

// Loose (u,v)-path of exactly the given order whose interior avoids forbidden.
inline LoosePath connect_dense(const Hypergraph& g, Vertex u, Vertex v, const VertexList& forbidden,
                               std::size_t order = 0, std::uint64_t budget = 1'000'000) {
  if (order == 0) order = dense_connect_order(g.k());
  std::vector<char> allowed(g.n(), 1);
  for (Vertex x : forbidden) {
    require(x < g.n(), ErrorKind::invalid_query, "forbidden vertex out of range");
    require(x != u && x != v, ErrorKind::invalid_query, "endpoint is forbidden");
    allowed[x] = 0;
  }
  return detail::connect_within(g, u, v, std::move(allowed), order, budget, "dense connection");
}

// Interior drawn from C minus R, avoiding Q.
inline LoosePath connect_through_reservoir(const Hypergraph& g, Vertex u, Vertex v, const VertexList& c,
                                           const VertexList& r, const VertexList& avoid, std::size_t order = 0,
                                           std::uint64_t budget = 1'000'000) {
  if (order == 0) order = reservoir_connect_order(g.k());
  std::vector<char> allowed(g.n(), 0);
  for (Vertex x : c) {
    require(x < g.n(), ErrorKind::invalid_query, "reservoir vertex out of range");
    allowed[x] = 1;
  }
  for (auto* s : {&r, &avoid})
    for (Vertex x : *s) {
      require(x < g.n(), ErrorKind::invalid_query, "excluded vertex out of range");
      require(x != u && x != v, ErrorKind::invalid_query, "endpoint lies in an excluded set");
      allowed[x] = 0;
    }
  allowed[u] = allowed[v] = 0;
  std::size_t free = 0;
  for (char a : allowed) free += a != 0;
  if (order >= 2 && free < order - 2) fail(ErrorKind::not_found, "reservoir too small for the requested order");
  return detail::connect_within(g, u, v, std::move(allowed), order, budget, "reservoir connection");
}

// One edge per vertex of W, each made of that vertex and k-1 vertices of Z,
// pairwise disjoint. Most constrained vertex first.
inline std::vector<VertexList> richness_matching(const Hypergraph& g, const VertexList& w, const VertexList& z,
                                                 std::uint64_t budget = 1'000'000) {
  const std::size_t k = g.k();
  std::vector<char> in_z(g.n(), 0), used(g.n(), 0);
  for (Vertex x : z) in_z[x] = 1;
  for (Vertex x : w) {
    require(x < g.n(), ErrorKind::invalid_query, "vertex out of range");
    require(!in_z[x], ErrorKind::invalid_query, "W and Z must be disjoint");
  }
  if (sorted_unique(z).size() < (k - 1) * w.size()) fail(ErrorKind::not_found, "Z too small to serve W");
  std::vector<std::vector<EdgeId>> options(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (EdgeId e : g.incident(w[i])) {
      bool ok = true;
      for (Vertex x : g.edge(e))
        if (x != w[i] && !in_z[x]) ok = false;
      if (ok) options[i].push_back(e);
    }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return options[a].size() < options[b].size(); });
  std::vector<EdgeId> chosen(w.size());
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t d) {
    if (d == order.size()) return true;
    std::size_t i = order[d];
    for (EdgeId e : options[i]) {
      if (++nodes > budget) fail(ErrorKind::not_found, "richness matching budget exhausted");
      bool free = true;
      for (Vertex x : g.edge(e))
        if (x != w[i] && used[x]) free = false;
      if (!free) continue;
      for (Vertex x : g.edge(e)) used[x] = 1;
      chosen[i] = e;
      if (rec(d + 1)) return true;
      for (Vertex x : g.edge(e))
        if (x != w[i]) used[x] = 0;
    }
    return false;
  };
  if (!rec(0)) fail(ErrorKind::not_found, "no matching of W into Z");
  std::vector<VertexList> out;
  for (EdgeId e : chosen) out.emplace_back(g.edge(e).begin(), g.edge(e).end());
  return out;
}

struct GrowResult {
  LoosePath path;
  bool stalled = false;
};

// Greedy loose path through clusters V_0..V_{s-1} in cyclic order, one new
// vertex per cluster per step. Each window is picked so that its new joint has
// the most extensions into the next clusters. Stops once some cluster is more
// than (1 - 2 sqrt(eps)) used.
inline GrowResult grow_path_through_clusters(const Hypergraph& g, const std::vector<VertexList>& clusters, Vertex start,
                                             double eps = 1.0 / 16) {
  const std::size_t k = g.k(), s = clusters.size();
  require(k >= 2 && s >= k - 1 && s % (k - 1) == 0, ErrorKind::invalid_query,
          "number of clusters must be a positive multiple of k-1");
  std::vector<int> cluster_of(g.n(), -1);
  for (std::size_t i = 0; i < s; ++i)
    for (Vertex v : clusters[i]) {
      require(v < g.n() && cluster_of[v] < 0, ErrorKind::invalid_query, "clusters must be disjoint vertex sets");
      cluster_of[v] = static_cast<int>(i);
    }
  require(start < g.n() && cluster_of[start] == 0, ErrorKind::invalid_query, "start must lie in the first cluster");
  const double cap = (1.0 - 2.0 * std::sqrt(eps));
  std::vector<std::size_t> used_in(s, 0);
  std::vector<char> used(g.n(), 0);
  GrowResult out{LoosePath{k, {start}}, false};
  used[start] = 1;
  used_in[0] = 1;
  std::size_t pos = 0;

  // Edges at joint x (sitting at position p) extending into clusters p+1..p+k-1.
  auto extensions = [&](Vertex x, std::size_t p, const std::function<void(EdgeId, const VertexList&)>& f) {
    for (EdgeId e : g.incident(x)) {
      VertexList slot(k - 1, 0);
      std::vector<char> hit(k - 1, 0);
      bool ok = true;
      for (Vertex y : g.edge(e)) {
        if (y == x) continue;
        int c = cluster_of[y];
        std::size_t off = c < 0 ? 0 : (static_cast<std::size_t>(c) + s - p % s) % s;
        if (c < 0 || used[y] || off == 0 || off >= k || hit[off - 1]) {
          ok = false;
          break;
        }
        hit[off - 1] = 1;
        slot[off - 1] = y;
      }
      if (ok) f(e, slot);
    }
  };

  for (;;) {
    for (std::size_t i = 0; i < s; ++i)
      if (static_cast<double>(used_in[i]) > cap * static_cast<double>(clusters[i].size())) return out;
    Vertex cur = out.path.back();
    std::optional<VertexList> best;
    std::size_t best_score = 0;
    extensions(cur, pos, [&](EdgeId, const VertexList& slot) {
      for (Vertex y : slot) used[y] = 1;
      std::size_t score = 0;
      extensions(slot.back(), pos + k - 1, [&](EdgeId, const VertexList&) { ++score; });
      for (Vertex y : slot) used[y] = 0;
      if (!best || score > best_score || (score == best_score && slot < *best)) {
        best = slot;
        best_score = score;
      }
    });
    if (!best) {
      out.stalled = true;
      return out;
    }
    for (Vertex y : *best) {
      used[y] = 1;
      ++used_in[static_cast<std::size_t>(cluster_of[y])];
      out.path.vertices.push_back(y);
    }
    pos += k - 1;
  }
}

}  // namespace hyperloose
