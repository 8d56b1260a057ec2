#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "girth.hpp"
#include "matching.hpp"
#include "random.hpp"

namespace hyperloose {

using Permutation = std::vector<std::uint32_t>;

// (m, l)-strip on blocks B_0..B_{l-1}; vertex (i, j) is the j-th vertex of
// B_i, with id i*m + j. layers[i][j] is the position in B_{i+1 mod l} matched
// to position j of B_i.
struct Strip {
  std::size_t m = 0;
  std::vector<Permutation> layers;

  std::size_t blocks() const { return layers.size(); }
  Vertex id(std::size_t block, std::size_t pos) const { return static_cast<Vertex>(block * m + pos); }
  friend bool operator==(const Strip&, const Strip&) = default;
};

struct DoubleStrip {
  Strip first, second;

  std::size_t m() const { return first.m; }
  std::size_t blocks() const { return first.blocks(); }
};

inline bool is_permutation_of_m(const Permutation& p, std::size_t m) {
  if (p.size() != m) return false;
  std::vector<char> seen(m, 0);
  for (auto x : p) {
    if (x >= m || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation out(first.size());
  for (std::size_t j = 0; j < first.size(); ++j) out[j] = then[first[j]];
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[p[j]] = static_cast<std::uint32_t>(j);
  return out;
}

inline Permutation identity_permutation(std::size_t m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline Permutation power(const Permutation& p, std::size_t e) {
  Permutation out = identity_permutation(p.size());
  for (std::size_t i = 0; i < e; ++i) out = compose(out, p);
  return out;
}

inline std::uint64_t permutation_order(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::uint64_t order = 1;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline void require_valid_strip(const Strip& h) {
  require(h.m >= 1 && h.blocks() >= 1, ErrorKind::invalid_query, "empty strip");
  for (auto& l : h.layers) require(is_permutation_of_m(l, h.m), ErrorKind::invalid_query, "layer is not a perfect matching");
}

// sigma_H: follow the matchings from B_0 all the way round back to B_0.
inline Permutation strip_permutation(const Strip& h) {
  require_valid_strip(h);
  Permutation sigma = identity_permutation(h.m);
  for (auto& l : h.layers) sigma = compose(sigma, l);
  return sigma;
}

inline bool is_cyclical(const Strip& h) { return strip_permutation(h) == identity_permutation(h.m); }

// The m vertex-disjoint cycles of a cyclical strip; cycle j starts at (0, j).
inline std::vector<VertexList> strip_cycles(const Strip& h) {
  require(is_cyclical(h), ErrorKind::invalid_query, "strip is not cyclical");
  std::vector<VertexList> out(h.m);
  for (std::size_t j = 0; j < h.m; ++j) {
    std::size_t pos = j;
    for (std::size_t i = 0; i < h.blocks(); ++i) {
      out[j].push_back(h.id(i, pos));
      pos = h.layers[i][pos];
    }
  }
  return out;
}

inline Strip chain_strips(const Strip& h, std::size_t copies) {
  require(copies >= 1, ErrorKind::invalid_query, "need at least one copy");
  require_valid_strip(h);
  Strip out{h.m, {}};
  for (std::size_t c = 0; c < copies; ++c) out.layers.insert(out.layers.end(), h.layers.begin(), h.layers.end());
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> strip_edges(const Strip& h) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < h.blocks(); ++i)
    for (std::size_t j = 0; j < h.m; ++j)
      out.push_back({h.id(i, j), h.id((i + 1) % h.blocks(), h.layers[i][j])});
  return out;
}

inline Girth double_strip_girth(const DoubleStrip& d) {
  auto edges = strip_edges(d.first);
  auto more = strip_edges(d.second);
  edges.insert(edges.end(), more.begin(), more.end());
  return graph_girth(d.blocks() * d.m(), std::move(edges));
}

inline std::optional<std::string> diagnose_double_strip(const DoubleStrip& d) {
  if (d.first.m != d.second.m || d.first.blocks() != d.second.blocks()) return "strips on different blocks";
  try {
    require_valid_strip(d.first);
    require_valid_strip(d.second);
  } catch (const Error& e) {
    return e.what();
  }
  if (!is_cyclical(d.first)) return "first strip not cyclical";
  if (!is_cyclical(d.second)) return "second strip not cyclical";
  for (std::size_t i = 0; i < d.blocks(); ++i)
    for (std::size_t j = 0; j < d.m(); ++j)
      if (d.first.layers[i][j] == d.second.layers[i][j]) return "strips share an edge in layer " + std::to_string(i);
  return std::nullopt;
}

namespace detail {

using Bipartite = std::vector<std::vector<std::size_t>>;  // left -> right

inline bool has_girth(const Bipartite& g, std::size_t m, std::size_t target) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (auto y : g[x]) edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(m + y)});
  return graph_girth(2 * m, edges).at_least(target);
}

// Circulant lift: x_i ~ y_{i+d} for d in a random delta-subset of Z_m, then
// both sides relabelled at random.
inline std::optional<Bipartite> circulant_candidate(std::size_t m, std::size_t delta, std::size_t target, Rng& rng) {
  std::vector<std::size_t> shifts(m);
  std::iota(shifts.begin(), shifts.end(), 0);
  shuffle(shifts, rng);
  shifts.resize(delta);
  Bipartite g(m);
  for (std::size_t x = 0; x < m; ++x)
    for (auto d : shifts) g[x].push_back((x + d) % m);
  if (!has_girth(g, m, target)) return std::nullopt;
  Permutation px(m), py(m);
  std::iota(px.begin(), px.end(), 0u);
  std::iota(py.begin(), py.end(), 0u);
  shuffle(px, rng);
  shuffle(py, rng);
  Bipartite out(m);
  for (std::size_t x = 0; x < m; ++x)
    for (auto y : g[x]) out[px[x]].push_back(py[y]);
  return out;
}

// Random greedy: repeatedly join a least-saturated left vertex to a right
// vertex at distance >= target-1, so no cycle shorter than target appears.
inline std::optional<Bipartite> greedy_candidate(std::size_t m, std::size_t delta, std::size_t target, Rng& rng) {
  std::vector<std::vector<std::size_t>> adj(2 * m);
  std::vector<std::size_t> deg(2 * m, 0);
  std::vector<std::size_t> dist(2 * m);
  for (std::size_t round = 0; round < m * delta; ++round) {
    std::size_t low = SIZE_MAX;
    for (std::size_t x = 0; x < m; ++x) low = std::min(low, deg[x]);
    std::vector<std::size_t> lefts;
    for (std::size_t x = 0; x < m; ++x)
      if (deg[x] == low) lefts.push_back(x);
    std::size_t x = lefts[uniform_index(rng, lefts.size())];
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[x] = 0;
    std::vector<std::size_t> frontier{x};
    for (std::size_t d = 0; d + 2 < target && !frontier.empty(); ++d) {
      std::vector<std::size_t> next;
      for (auto u : frontier)
        for (auto w : adj[u])
          if (dist[w] == SIZE_MAX) {
            dist[w] = d + 1;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    std::vector<std::size_t> options;
    std::size_t best = SIZE_MAX;
    for (std::size_t y = m; y < 2 * m; ++y) {
      if (deg[y] >= delta || dist[y] != SIZE_MAX) continue;
      if (deg[y] < best) {
        best = deg[y];
        options.clear();
      }
      if (deg[y] == best) options.push_back(y);
    }
    if (options.empty()) return std::nullopt;
    std::size_t y = options[uniform_index(rng, options.size())];
    adj[x].push_back(y);
    adj[y].push_back(x);
    ++deg[x];
    ++deg[y];
  }
  Bipartite out(m);
  for (std::size_t x = 0; x < m; ++x)
    for (auto y : adj[x]) out[x].push_back(y - m);
  return out;
}

// Peels delta edge-disjoint perfect matchings (possible since the graph is
// regular bipartite); each matching is returned as left -> right.
inline std::vector<Permutation> peel_matchings(Bipartite g, std::size_t m, std::size_t delta, Rng& rng) {
  std::vector<Permutation> out;
  for (std::size_t r = 0; r < delta; ++r) {
    for (auto& a : g) shuffle(a, rng);
    auto pm = bipartite_perfect_matching(m, g);
    require(pm.has_value(), ErrorKind::construction_failure, "regular bipartite graph without a perfect matching");
    Permutation p(m);
    for (std::size_t x = 0; x < m; ++x) {
      p[x] = static_cast<std::uint32_t>((*pm)[x]);
      g[x].erase(std::find(g[x].begin(), g[x].end(), (*pm)[x]));
    }
    out.push_back(p);
  }
  return out;
}

// Even blocks are copies of the left class, odd blocks of the right class.
inline Strip strip_from_matchings(const std::vector<Permutation>& ms, std::size_t m) {
  Strip s{m, {}};
  for (std::size_t i = 0; i < ms.size(); ++i) s.layers.push_back(i % 2 == 0 ? ms[i] : inverse(ms[i]));
  return s;
}

}  // namespace detail

struct DoubleStripOptions {
  std::size_t ell = 2;
  std::size_t girth_target = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 2000;     // candidate graphs tried
  std::size_t block_multiple = 1;  // total block count is made divisible by this
};

// (m, q)-double-strip whose union has girth >= girth_target: a bipartite
// 2l-regular graph of that girth is found by randomized search, split into 2l
// perfect matchings, l per strip, and each strip is chained until cyclical.
// Among the ways to hand out the matchings, the one with the smallest
// resulting q is kept.
inline DoubleStrip build_double_strip(std::size_t m, const DoubleStripOptions& opt) {
  const std::size_t ell = opt.ell;
  require(m >= 1, ErrorKind::invalid_query, "block size must be positive");
  require(ell >= 2 && ell % 2 == 0, ErrorKind::invalid_query, "strip length must be even");
  require(opt.girth_target >= 4, ErrorKind::invalid_query, "girth target must be at least 4");
  require(opt.block_multiple >= 1, ErrorKind::invalid_query, "block multiple must be positive");
  const std::size_t delta = 2 * ell;
  Rng rng = make_rng(opt.seed, 0x5712);
  std::optional<detail::Bipartite> base;
  if (delta <= m)
    for (std::uint64_t attempt = 0; attempt < opt.budget && !base; ++attempt)
      base = attempt % 2 == 0 ? detail::circulant_candidate(m, delta, opt.girth_target, rng)
                              : detail::greedy_candidate(m, delta, opt.girth_target, rng);
  if (!base)
    fail(ErrorKind::construction_failure, "no " + std::to_string(delta) + "-regular bipartite graph of girth " +
                                              std::to_string(opt.girth_target) + " found on " + std::to_string(m) +
                                              "+" + std::to_string(m) + " vertices");

  std::uint64_t best_c = UINT64_MAX;
  std::vector<Permutation> best_first, best_second;
  for (int peel = 0; peel < 8; ++peel) {
    auto ms = detail::peel_matchings(*base, m, delta, rng);
    std::vector<std::size_t> idx(delta);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<Permutation> a, b;
      for (std::size_t i = 0; i < ell; ++i) a.push_back(ms[idx[i]]);
      for (std::size_t i = ell; i < delta; ++i) b.push_back(ms[idx[i]]);
      auto oa = permutation_order(strip_permutation(detail::strip_from_matchings(a, m)));
      auto ob = permutation_order(strip_permutation(detail::strip_from_matchings(b, m)));
      std::uint64_t c = std::lcm(oa, ob);
      while ((c * ell) % opt.block_multiple != 0) c += std::lcm(oa, ob);
      if (c < best_c) {
        best_c = c;
        best_first = a;
        best_second = b;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  DoubleStrip d{chain_strips(detail::strip_from_matchings(best_first, m), best_c),
                chain_strips(detail::strip_from_matchings(best_second, m), best_c)};
  if (auto why = diagnose_double_strip(d)) fail(ErrorKind::construction_failure, *why);
  require(double_strip_girth(d).at_least(opt.girth_target), ErrorKind::construction_failure,
          "double-strip girth below target");
  return d;
}

// Random cyclical double strip on q blocks: every layer but the last is a
// random matching, the last one closes sigma to the identity; the second
// strip is resampled until it shares no edge with the first.
inline DoubleStrip random_double_strip(std::size_t m, std::size_t q, std::uint64_t seed, std::uint64_t budget = 10000) {
  require(m >= 2 && q >= 2, ErrorKind::invalid_query, "need m >= 2 and q >= 2");
  Rng rng = make_rng(seed, 0xd5);
  auto random_layer = [&](const Permutation* avoid) {
    Permutation p = identity_permutation(m);
    for (;;) {
      shuffle(p, rng);
      bool ok = true;
      if (avoid)
        for (std::size_t j = 0; j < m; ++j) ok = ok && p[j] != (*avoid)[j];
      if (ok) return p;
    }
  };
  auto closed = [&](const Strip* avoid) {
    Strip s{m, {}};
    Permutation sigma = identity_permutation(m);
    for (std::size_t i = 0; i + 1 < q; ++i) {
      s.layers.push_back(random_layer(avoid ? &avoid->layers[i] : nullptr));
      sigma = compose(sigma, s.layers.back());
    }
    s.layers.push_back(inverse(sigma));
    return s;
  };
  Strip first = closed(nullptr);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    DoubleStrip d{first, closed(&first)};
    if (!diagnose_double_strip(d)) return d;
  }
  fail(ErrorKind::construction_failure, "no edge-disjoint second strip found");
}

}  // namespace hyperloose
