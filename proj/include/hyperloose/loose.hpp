#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace hyperloose {

// Window j of a loose path covers positions j(k-1) .. j(k-1)+k-1.
struct LoosePath {
  std::size_t k = 3;
  VertexList vertices;

  std::size_t order() const { return vertices.size(); }
  std::size_t edge_count() const { return vertices.size() <= 1 ? 0 : (vertices.size() - 1) / (k - 1); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  VertexList window(std::size_t j) const {
    VertexList e(vertices.begin() + j * (k - 1), vertices.begin() + j * (k - 1) + k);
    std::sort(e.begin(), e.end());
    return e;
  }
  std::vector<VertexList> edges() const {
    std::vector<VertexList> out;
    for (std::size_t j = 0; j < edge_count(); ++j) out.push_back(window(j));
    return out;
  }
  LoosePath reversed() const { return {k, VertexList(vertices.rbegin(), vertices.rend())}; }
  friend bool operator==(const LoosePath&, const LoosePath&) = default;
};

// vertices[0] is a joint; the last window wraps around to vertices[0].
struct LooseCycle {
  std::size_t k = 3;
  VertexList vertices;

  std::size_t order() const { return vertices.size(); }
  std::size_t edge_count() const { return vertices.size() / (k - 1); }
  VertexList window(std::size_t j) const {
    VertexList e;
    for (std::size_t i = 0; i < k; ++i) e.push_back(vertices[(j * (k - 1) + i) % vertices.size()]);
    std::sort(e.begin(), e.end());
    return e;
  }
  std::vector<VertexList> edges() const {
    std::vector<VertexList> out;
    for (std::size_t j = 0; j < edge_count(); ++j) out.push_back(window(j));
    return out;
  }
  friend bool operator==(const LooseCycle&, const LooseCycle&) = default;
};

namespace detail {

inline std::optional<std::string> repeated_vertex(const VertexList& vs) {
  VertexList s = vs;
  std::sort(s.begin(), s.end());
  auto it = std::adjacent_find(s.begin(), s.end());
  if (it != s.end()) return "vertex " + std::to_string(*it) + " repeats";
  return std::nullopt;
}

}  // namespace detail

// Shape checks plus window membership; nullopt when valid.
inline std::optional<std::string> diagnose_loose_path(const Hypergraph& g, const LoosePath& p) {
  if (p.k != g.k()) return "uniformity mismatch";
  if (p.k < 2) return "uniformity below 2";
  if (p.vertices.empty()) return "empty path";
  if ((p.order() - 1) % (p.k - 1) != 0) return "order is not 1 mod k-1";
  for (Vertex v : p.vertices)
    if (v >= g.n()) return "vertex " + std::to_string(v) + " outside the host";
  if (auto r = detail::repeated_vertex(p.vertices)) return r;
  for (std::size_t j = 0; j < p.edge_count(); ++j)
    if (!g.has_edge(p.window(j))) return "window " + std::to_string(j) + " is not an edge";
  return std::nullopt;
}

inline bool validate_loose_path(const Hypergraph& g, const LoosePath& p) { return !diagnose_loose_path(g, p); }

// A cycle needs at least three windows: with two, the windows would share
// two vertices.
inline std::optional<std::string> diagnose_loose_cycle(const Hypergraph& g, const LooseCycle& c) {
  if (c.k != g.k()) return "uniformity mismatch";
  if (c.k < 2) return "uniformity below 2";
  if (c.order() % (c.k - 1) != 0) return "order is not 0 mod k-1";
  if (c.edge_count() < 3) return "fewer than three edges";
  for (Vertex v : c.vertices)
    if (v >= g.n()) return "vertex " + std::to_string(v) + " outside the host";
  if (auto r = detail::repeated_vertex(c.vertices)) return r;
  for (std::size_t j = 0; j < c.edge_count(); ++j)
    if (!g.has_edge(c.window(j))) return "window " + std::to_string(j) + " is not an edge";
  return std::nullopt;
}

inline bool validate_loose_cycle(const Hypergraph& g, const LooseCycle& c) { return !diagnose_loose_cycle(g, c); }

inline bool is_hamilton(const Hypergraph& g, const LooseCycle& c) {
  return c.order() == g.n() && validate_loose_cycle(g, c);
}

inline bool spans(const LoosePath& p, VertexList set) {
  return sorted_unique(p.vertices) == sorted_unique(std::move(set)) && p.vertices.size() == sorted_unique(p.vertices).size();
}

inline std::size_t cycle_index(const LooseCycle& c, Vertex x) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), x);
  require(it != c.vertices.end(), ErrorKind::invalid_query, "vertex " + std::to_string(x) + " not on the cycle");
  return static_cast<std::size_t>(it - c.vertices.begin());
}

inline std::size_t cycle_distance(const LooseCycle& c, Vertex x, Vertex y) {
  std::size_t i = cycle_index(c, x), j = cycle_index(c, y);
  std::size_t gap = i > j ? i - j : j - i;
  return std::min(gap, c.order() - gap);
}

inline bool is_K_spread(const LooseCycle& c, const VertexList& xs, std::size_t big_k) {
  for (Vertex x : xs) cycle_index(c, x);
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (xs[a] != xs[b] && cycle_distance(c, xs[a], xs[b]) < big_k) return false;
  return true;
}

// Number of cycle edges containing x: 2 at joints, 1 elsewhere.
inline std::size_t cycle_vertex_degree(const LooseCycle& c, Vertex x) {
  return cycle_index(c, x) % (c.k - 1) == 0 ? 2 : 1;
}

inline LoosePath concatenate(const LoosePath& p, const LoosePath& q) {
  require(p.k == q.k, ErrorKind::invalid_composition, "uniformity mismatch");
  require(!p.vertices.empty() && !q.vertices.empty(), ErrorKind::invalid_composition, "empty path");
  require(p.back() == q.front(), ErrorKind::invalid_composition, "endpoints do not meet");
  LoosePath out{p.k, p.vertices};
  out.vertices.insert(out.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  require(!detail::repeated_vertex(out.vertices), ErrorKind::invalid_composition, "interiors overlap");
  return out;
}

// Closes a (u,v)-path and a (v,u)-path into one cycle.
inline LooseCycle close_cycle(const LoosePath& p, const LoosePath& q) {
  require(p.k == q.k && p.back() == q.front() && q.back() == p.front(), ErrorKind::invalid_composition,
          "paths do not close up");
  LooseCycle c{p.k, p.vertices};
  c.vertices.insert(c.vertices.end(), q.vertices.begin() + 1, q.vertices.end() - 1);
  require(!detail::repeated_vertex(c.vertices), ErrorKind::invalid_composition, "interiors overlap");
  return c;
}

}  // namespace hyperloose
