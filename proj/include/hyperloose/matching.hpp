#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hypergraph.hpp"

namespace hyperloose {

// Maximum matching by augmenting paths. adj[l] lists right vertices in the
// order they should be tried. Returns match_left (or -1 for unmatched).
inline std::vector<int> bipartite_matching(std::size_t right_count, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<int> match_left(adj.size(), -1), match_right(right_count, -1);
  std::vector<std::size_t> seen(right_count, SIZE_MAX);
  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t l, std::size_t stamp) {
    for (std::size_t r : adj[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (match_right[r] < 0 || augment(static_cast<std::size_t>(match_right[r]), stamp)) {
        match_left[l] = static_cast<int>(r);
        match_right[r] = static_cast<int>(l);
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < adj.size(); ++l) augment(l, l);
  return match_left;
}

inline std::optional<std::vector<std::size_t>> bipartite_perfect_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adj) {
  if (adj.size() != right_count) return std::nullopt;
  auto m = bipartite_matching(right_count, adj);
  std::vector<std::size_t> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return std::nullopt;
    out[i] = static_cast<std::size_t>(m[i]);
  }
  return out;
}

// Perfect matching of h restricted to the vertices with active[v] set, by
// backtracking: branch on the uncovered vertex with the fewest usable edges.
inline std::optional<std::vector<EdgeId>> perfect_matching(const Hypergraph& h, const std::vector<char>& active) {
  const std::size_t n = h.n();
  std::size_t remaining = 0;
  for (Vertex v = 0; v < n; ++v) remaining += active[v] != 0;
  if (remaining % h.k() != 0) return std::nullopt;
  std::vector<char> covered(n, 0);
  std::vector<EdgeId> chosen;
  auto usable = [&](EdgeId e) {
    for (Vertex v : h.edge(e))
      if (!active[v] || covered[v]) return false;
    return true;
  };
  std::function<bool(std::size_t)> solve = [&](std::size_t left) {
    if (left == 0) return true;
    Vertex pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v) {
      if (!active[v] || covered[v]) continue;
      std::size_t c = 0;
      for (EdgeId e : h.incident(v)) c += usable(e);
      if (c < fewest) {
        fewest = c;
        pick = v;
        if (c == 0) return false;
      }
    }
    for (EdgeId e : h.incident(pick)) {
      if (!usable(e)) continue;
      for (Vertex v : h.edge(e)) covered[v] = 1;
      chosen.push_back(e);
      if (solve(left - h.k())) return true;
      chosen.pop_back();
      for (Vertex v : h.edge(e)) covered[v] = 0;
    }
    return false;
  };
  if (!solve(remaining)) return std::nullopt;
  return chosen;
}

}  // namespace hyperloose
