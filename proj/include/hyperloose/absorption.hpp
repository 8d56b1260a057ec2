#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absorber.hpp"
#include "connect.hpp"
#include "oracle.hpp"
#include "template.hpp"

namespace hyperloose {

enum class TemplateKind { matching, six_cycle, search };

struct EngineConfig {
  double gamma = 0.1;
  double eta = 0.05;   // leftover fraction: |W| <= eta n
  double alpha = 0.6;  // |A| <= alpha n
  // Reservoir fraction and exclusion fraction of the sparse route; carried
  // for completeness, the dense route does not read them.
  double nu = 0.1;
  double rho = 0.5;
  std::size_t connect_order = 0;  // 0: 4(k-1)+1
  std::size_t absorber_q = 0;     // 0: smallest admissible
  std::size_t leftover = 0;       // vertices the cover stage leaves for absorption
  TemplateKind template_kind = TemplateKind::matching;
  std::size_t attempts = 200;  // resamples per absorber
  std::uint64_t node_budget = 2'000'000;
  std::uint64_t seed = 0;

  // Small enough that everything fits in complete(60,3).
  static EngineConfig toy(std::size_t k) {
    EngineConfig c;
    c.connect_order = k;
    c.leftover = k - 1;
    return c;
  }
};

inline std::size_t default_absorber_q(std::size_t k) {
  std::size_t q = 3 * (k - 1);
  while (q < 2 * k) q += k - 1;
  return q;
}

// A piece of the backbone: a connecting path, or passive path `slot` of
// absorber `absorber` (traversed reversed if flagged).
struct BackboneSegment {
  LoosePath path;
  int absorber = -1;
  std::size_t slot = 0;
  bool reversed = false;
};

struct AbsorbingStructure {
  std::size_t k = 3;
  VertexList a;  // vertex set A
  Vertex u = 0, v = 0, u_prime = 0;
  Template tmpl;
  VertexList template_image;  // template vertex i sits at template_image[i]
  VertexList reservoir;       // image of the flexible set; contains u'
  std::vector<Absorber> absorbers;  // absorbers[i] rooted in the image of template edge i
  std::vector<BackboneSegment> segments;

  LoosePath backbone() const {
    LoosePath p = segments.front().path;
    for (std::size_t i = 1; i < segments.size(); ++i) p = concatenate(p, segments[i].path);
    return p;
  }
};

namespace detail {

inline Template make_template(const EngineConfig& cfg, std::size_t r) {
  switch (cfg.template_kind) {
    case TemplateKind::matching: return matching_template(r);
    case TemplateKind::six_cycle:
      require(r == 2, ErrorKind::invalid_query, "the 6-cycle template needs k = 3");
      return six_cycle_template();
    case TemplateKind::search: return find_small_template(r, std::max<std::size_t>(r, 4), 3, cfg.seed);
  }
  fail(ErrorKind::invalid_query, "unknown template kind");
}

// Absorber rooted in `root` on 2q fresh vertices: the local reduced graph T
// keeps a k-set of root + Y when every lift of it to Y/Ybar is an edge of G.
inline std::optional<Absorber> dense_absorber_in(const Hypergraph& g, const VertexList& root, const VertexList& y,
                                                 const VertexList& ybar, std::uint64_t budget) {
  const std::size_t k = g.k(), q = y.size();
  const std::size_t n = q + root.size();
  auto lifts = [&](Vertex local) -> VertexList {
    if (local >= q) return {root[local - q]};
    return {y[local], ybar[local]};
  };
  std::vector<Vertex> flat;
  for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), [&](std::span<const std::uint32_t> c) {
    std::vector<VertexList> options;
    for (auto l : c) options.push_back(lifts(l));
    std::vector<std::size_t> idx(k, 0);
    bool all = true;
    for (bool more = true; more && all;) {
      VertexList e;
      for (std::size_t j = 0; j < k; ++j) e.push_back(options[j][idx[j]]);
      all = g.has_edge_unsorted(e);
      more = false;
      for (std::size_t j = k; j-- > 0;) {
        if (++idx[j] < options[j].size()) {
          more = true;
          break;
        }
        idx[j] = 0;
      }
    }
    if (all)
      for (auto l : c) flat.push_back(static_cast<Vertex>(l));
  });
  Hypergraph t = Hypergraph::from_flat(n, k, std::move(flat));
  VertexList inner(q);
  std::iota(inner.begin(), inner.end(), 0u);
  auto c2 = hamilton_oracle(induced_relabel(t, inner), budget);
  if (!c2.found()) return std::nullopt;
  VertexList f = c2.value->window(0);
  VertexList rest;
  std::set_difference(inner.begin(), inner.end(), f.begin(), f.end(), std::back_inserter(rest));
  VertexList local_root;
  for (std::size_t i = 0; i < root.size(); ++i) local_root.push_back(static_cast<Vertex>(q + i));
  std::optional<LooseCycle> c1;
  for_each_subset_of<Vertex>(rest, static_cast<std::uint32_t>(k), [&](std::span<const Vertex> e) {
    if (!t.has_edge(e)) return true;
    auto r = hamilton_cycle_from(t, VertexList(e.begin(), e.end()), budget);
    if (r.found()) c1 = *r.value;
    return !c1.has_value();
  });
  if (!c1) return std::nullopt;
  HostedAbsorber h = simple_dense_absorber(t, local_root, *c1, *c2.value);
  std::vector<Vertex> to_g(h.host.n());
  for (Vertex l = 0; l < n; ++l) {
    auto lift = lifts(l);
    for (std::size_t i = 0; i < h.clusters[l].size(); ++i) to_g[h.clusters[l][i]] = lift[i];
  }
  Absorber a = h.absorber;
  for (auto& r : a.root) r = to_g[r];
  for (auto* side : {&a.active, &a.passive})
    for (auto& p : *side)
      for (auto& x : p.vertices) x = to_g[x];
  if (!verify_absorber(g, a)) return std::nullopt;
  return a;
}

}  // namespace detail

// Dense route: template embedded on random vertices, one simple dense
// absorber per template edge on fresh sampled vertices, then a backbone
// u -> (passive paths) -> u' through short connections.
inline AbsorbingStructure build_absorbing_structure(const Hypergraph& g, const EngineConfig& cfg,
                                                    const VertexList& avoid = {}) {
  const std::size_t n = g.n(), k = g.k();
  require(k >= 3, ErrorKind::invalid_query, "the engine needs k >= 3");
  const std::size_t q = cfg.absorber_q ? cfg.absorber_q : default_absorber_q(k);
  require(q % (k - 1) == 0 && q >= default_absorber_q(k), ErrorKind::invalid_query, "absorber size not admissible");
  const std::size_t order = cfg.connect_order ? cfg.connect_order : dense_connect_order(k);
  Rng rng = make_rng(cfg.seed, 0xab5);

  std::vector<char> taken(n, 0);
  for (Vertex x : avoid) {
    require(x < n, ErrorKind::invalid_query, "avoided vertex out of range");
    taken[x] = 1;
  }
  VertexList pool;
  for (Vertex x = 0; x < n; ++x)
    if (!taken[x]) pool.push_back(x);
  shuffle(pool, rng);
  std::size_t next = 0;
  auto fresh = [&]() -> Vertex {
    while (next < pool.size() && taken[pool[next]]) ++next;
    if (next == pool.size()) fail(ErrorKind::construction_failure, "structure: ran out of vertices");
    taken[pool[next]] = 1;
    return pool[next++];
  };

  AbsorbingStructure s;
  s.k = k;
  s.tmpl = detail::make_template(cfg, k - 1);
  for (std::size_t i = 0; i < s.tmpl.t.n(); ++i) s.template_image.push_back(fresh());
  for (Vertex z : s.tmpl.z) s.reservoir.push_back(s.template_image[z]);
  s.u_prime = s.template_image[s.tmpl.z.front()];
  s.v = fresh();
  s.u = fresh();

  for (EdgeId e = 0; e < s.tmpl.t.edge_count(); ++e) {
    VertexList root;
    for (Vertex t : s.tmpl.t.edge(e)) root.push_back(s.template_image[t]);
    std::optional<Absorber> a;
    for (std::size_t attempt = 0; attempt < cfg.attempts && !a; ++attempt) {
      VertexList free;
      for (Vertex x : pool)
        if (!taken[x]) free.push_back(x);
      if (free.size() < 2 * q) break;
      shuffle(free, rng);
      VertexList y(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(q));
      VertexList ybar(free.begin() + static_cast<std::ptrdiff_t>(q), free.begin() + static_cast<std::ptrdiff_t>(2 * q));
      a = detail::dense_absorber_in(g, root, y, ybar, cfg.node_budget);
    }
    if (!a) fail(ErrorKind::construction_failure, "absorber stage: no absorber for template edge " + std::to_string(e));
    for (Vertex x : a->vertices()) taken[x] = 1;
    s.absorbers.push_back(std::move(*a));
  }

  // Backbone.
  Vertex cur = s.u;
  auto link = [&](Vertex to) {
    std::vector<char> allowed(n, 0);
    for (Vertex x = 0; x < n; ++x) allowed[x] = !taken[x];
    allowed[cur] = allowed[to] = 0;
    VertexList forbidden;
    for (Vertex x = 0; x < n; ++x)
      if (!allowed[x] && x != cur && x != to) forbidden.push_back(x);
    LoosePath p;
    try {
      p = connect_dense(g, cur, to, forbidden, order, cfg.node_budget);
    } catch (const Error& err) {
      fail(ErrorKind::construction_failure, std::string("connection stage: ") + err.what());
    }
    for (Vertex x : p.vertices) taken[x] = 1;
    s.segments.push_back({p, -1, 0, false});
    cur = to;
  };
  for (std::size_t i = 0; i < s.absorbers.size(); ++i)
    for (std::size_t j = 0; j < s.absorbers[i].passive.size(); ++j) {
      const LoosePath& p = s.absorbers[i].passive[j];
      link(p.front());
      s.segments.push_back({p, static_cast<int>(i), j, false});
      cur = p.back();
    }
  link(s.u_prime);

  VertexList a_set = s.backbone().vertices;
  a_set.insert(a_set.end(), s.template_image.begin(), s.template_image.end());
  a_set.push_back(s.v);
  s.a = sorted_unique(std::move(a_set));
  if (static_cast<double>(s.a.size()) > cfg.alpha * static_cast<double>(n))
    fail(ErrorKind::construction_failure, "structure: |A| = " + std::to_string(s.a.size()) + " exceeds alpha n");
  return s;
}

inline std::optional<std::string> diagnose_structure(const Hypergraph& g, const AbsorbingStructure& s) {
  if (!verify_template(s.tmpl)) return "template check failed";
  for (std::size_t i = 0; i < s.absorbers.size(); ++i) {
    if (auto why = diagnose_absorber(g, s.absorbers[i])) return "absorber " + std::to_string(i) + ": " + *why;
    VertexList root;
    for (Vertex t : s.tmpl.t.edge(static_cast<EdgeId>(i))) root.push_back(s.template_image[t]);
    if (sorted_unique(root) != sorted_unique(s.absorbers[i].root)) return "absorber " + std::to_string(i) + " has the wrong root";
  }
  for (std::size_t i = 0; i < s.absorbers.size(); ++i)
    for (std::size_t j = i + 1; j < s.absorbers.size(); ++j) {
      auto a = s.absorbers[i].active_vertices(), b = s.absorbers[j].active_vertices();
      VertexList common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      for (Vertex x : common)
        if (std::find(s.template_image.begin(), s.template_image.end(), x) == s.template_image.end())
          return "absorbers overlap";
    }
  LoosePath b = s.backbone();
  if (auto why = diagnose_loose_path(g, b)) return "backbone: " + *why;
  if (b.front() != s.u || b.back() != s.u_prime) return "backbone endpoints";
  if (!std::binary_search(s.a.begin(), s.a.end(), s.u) || !std::binary_search(s.a.begin(), s.a.end(), s.v))
    return "u or v outside A";
  return std::nullopt;
}

// Loose (u,v)-path on exactly A + W: W + v is threaded from u' through the
// flexible vertices, the template remainder is matched, and the absorbers of
// matched edges are switched to their active paths.
inline LoosePath absorb(const Hypergraph& g, const AbsorbingStructure& s, const VertexList& w_in,
                        std::uint64_t budget = 2'000'000) {
  const std::size_t k = s.k, n = g.n();
  VertexList w = sorted_unique(w_in);
  require(w.size() == w_in.size(), ErrorKind::invalid_query, "W repeats a vertex");
  require(w.size() % (k - 1) == 0, ErrorKind::invalid_query, "|W| must be divisible by k-1");
  for (Vertex x : w) {
    require(x < n, ErrorKind::invalid_query, "W vertex out of range");
    require(!std::binary_search(s.a.begin(), s.a.end(), x), ErrorKind::invalid_query, "W meets A");
  }
  std::vector<int> template_index(n, -1);
  for (std::size_t i = 0; i < s.template_image.size(); ++i) template_index[s.template_image[i]] = static_cast<int>(i);

  std::vector<char> leftover;
  auto matchable = [&](const VertexList& seq) {
    leftover.assign(s.tmpl.t.n(), 1);
    for (Vertex x : seq)
      if (template_index[x] >= 0) leftover[static_cast<std::size_t>(template_index[x])] = 0;
    return perfect_matching(s.tmpl.t, leftover).has_value();
  };
  PathQuery pq;
  pq.g = &g;
  pq.prefix = {s.u_prime};
  pq.end = s.v;
  pq.allowed.assign(n, 0);
  pq.required.assign(n, 0);
  for (Vertex x : w) pq.allowed[x] = pq.required[x] = 1;
  for (Vertex z : s.reservoir)
    if (z != s.u_prime) pq.allowed[z] = 1;
  pq.prefer_required = true;
  pq.accept = matchable;
  pq.budget = budget;
  auto r = search_path(pq);
  if (!r.found())
    fail(ErrorKind::absorption_failure, r.status == SearchStatus::unknown
                                            ? "no path through W within budget"
                                            : "W cannot be threaded through the flexible set with a matchable remainder");
  LoosePath pw{k, *r.value};
  matchable(pw.vertices);
  auto m = perfect_matching(s.tmpl.t, leftover);
  if (!m) fail(ErrorKind::absorption_failure, "template remainder has no perfect matching");
  std::vector<char> active(s.absorbers.size(), 0);
  for (EdgeId e : *m) active[e] = 1;

  LoosePath out;
  bool first = true;
  for (auto& seg : s.segments) {
    LoosePath piece = seg.path;
    if (seg.absorber >= 0 && active[static_cast<std::size_t>(seg.absorber)]) {
      piece = s.absorbers[static_cast<std::size_t>(seg.absorber)].active[seg.slot];
      if (seg.reversed) piece = piece.reversed();
    }
    out = first ? piece : concatenate(out, piece);
    first = false;
  }
  out = concatenate(out, pw);
  VertexList expected = s.a;
  expected.insert(expected.end(), w.begin(), w.end());
  if (auto why = diagnose_loose_path(g, out)) fail(ErrorKind::absorption_failure, "assembled path invalid: " + *why);
  if (!spans(out, expected)) fail(ErrorKind::absorption_failure, "assembled path does not span A + W");
  return out;
}

namespace detail {

// Leftover W of the requested size from `candidates`, then a spanning path
// from `from` to s.u through everything else outside A.
inline LooseCycle close_with_cover(const Hypergraph& g, const AbsorbingStructure& s, const EngineConfig& cfg,
                                   LoosePath head, const VertexList& excluded, Rng& rng) {
  const std::size_t n = g.n(), k = g.k();
  std::vector<char> out_of_cover(n, 0);
  for (Vertex x : s.a) out_of_cover[x] = 1;
  for (Vertex x : excluded) out_of_cover[x] = 1;
  for (Vertex x : head.vertices) out_of_cover[x] = 1;
  VertexList free;
  for (Vertex x = 0; x < n; ++x)
    if (!out_of_cover[x]) free.push_back(x);
  std::size_t leftover = cfg.leftover - cfg.leftover % (k - 1);
  require(static_cast<double>(leftover) <= cfg.eta * static_cast<double>(n) + 1e-9, ErrorKind::invalid_query,
          "leftover exceeds eta n");
  if (free.size() < leftover) fail(ErrorKind::construction_failure, "cover stage: not enough vertices left");
  shuffle(free, rng);
  VertexList w(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(leftover));
  VertexList rest(free.begin() + static_cast<std::ptrdiff_t>(leftover), free.end());
  auto cover = spanning_path_within(g, head.back(), s.u, rest, cfg.node_budget);
  if (!cover.found())
    fail(ErrorKind::construction_failure, std::string("cover stage: ") +
                                              (cover.status == SearchStatus::unknown ? "budget exhausted" : "no spanning path"));
  LoosePath q = concatenate(head, *cover.value);
  LoosePath p;
  try {
    p = absorb(g, s, w, cfg.node_budget);
  } catch (const Error& e) {
    fail(ErrorKind::construction_failure, std::string("absorption stage: ") + e.what());
  }
  LooseCycle c = close_cycle(p, q);
  if (!is_hamilton(g, c)) fail(ErrorKind::construction_failure, "glue stage: result is not a Hamilton cycle");
  return c;
}

}  // namespace detail

// Absorbing structure, cover of everything but a small leftover W by a
// (v,u)-path outside A, absorption of W into a (u,v)-path, and gluing.
inline LooseCycle find_hamilton_absorption(const Hypergraph& g, const EngineConfig& cfg) {
  require(g.k() >= 3 && g.n() % (g.k() - 1) == 0, ErrorKind::invalid_query, "n divisible by k-1 required");
  auto s = build_absorbing_structure(g, cfg);
  Rng rng = make_rng(cfg.seed, 0xc0e);
  return detail::close_with_cover(g, s, cfg, LoosePath{g.k(), {s.v}}, {}, rng);
}

// Hamilton cycle with the vertices of X at joints and pairwise at distance
// at least K: the structure avoids X, the cover path starts v -> x_1 and runs
// x_i -> x_{i+1} through spacers of order >= K+1.
inline LooseCycle spread_hamilton(const Hypergraph& g, const VertexList& x_in, std::size_t big_k,
                                  const EngineConfig& cfg) {
  const std::size_t n = g.n(), k = g.k();
  require(k >= 3 && n % (k - 1) == 0, ErrorKind::invalid_query, "n divisible by k-1 required");
  VertexList x = sorted_unique(x_in);
  require(x.size() == x_in.size(), ErrorKind::invalid_query, "X repeats a vertex");
  for (Vertex v : x) require(v < n, ErrorKind::invalid_query, "X vertex out of range");
  if (x.empty()) return find_hamilton_absorption(g, cfg);
  if (big_k * x.size() > n) fail(ErrorKind::construction_failure, "K |X| exceeds n");
  auto s = build_absorbing_structure(g, cfg, x);
  std::size_t spacer = big_k + 1;
  while ((spacer - 1) % (k - 1) != 0) ++spacer;
  Rng rng = make_rng(cfg.seed, 0x5b7);
  LoosePath head{k, {s.v}};
  std::vector<char> taken(n, 0);
  for (Vertex a : s.a) taken[a] = 1;
  for (Vertex v : x) taken[v] = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vertex from = head.back(), to = x[i];
    VertexList forbidden;
    for (Vertex v = 0; v < n; ++v)
      if (taken[v] && v != from && v != to) forbidden.push_back(v);
    LoosePath p;
    try {
      p = connect_dense(g, from, to, forbidden, i == 0 ? k : spacer, cfg.node_budget);
    } catch (const Error& e) {
      fail(ErrorKind::construction_failure, std::string("spread stage: ") + e.what());
    }
    for (Vertex v : p.vertices) taken[v] = 1;
    head = concatenate(head, p);
  }
  LooseCycle c = detail::close_with_cover(g, s, cfg, head, {}, rng);
  if (!is_K_spread(c, x, big_k)) fail(ErrorKind::construction_failure, "spread stage: X is not K-spread");
  for (Vertex v : x)
    if (cycle_vertex_degree(c, v) != 2) fail(ErrorKind::construction_failure, "spread stage: X vertex off a joint");
  return c;
}

}  // namespace hyperloose
