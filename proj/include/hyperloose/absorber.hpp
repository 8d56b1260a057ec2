#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "density.hpp"
#include "generators.hpp"
#include "girth.hpp"
#include "loose.hpp"
#include "strip.hpp"

namespace hyperloose {

// Absorber rooted in X: in the active state the paths cover X, in the
// passive state they avoid it. Its vertices are those of the passive paths.
struct Absorber {
  std::size_t k = 3;
  VertexList root;
  std::vector<LoosePath> active, passive;

  VertexList vertices() const {
    VertexList out;
    for (auto& p : passive) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
    return sorted_unique(std::move(out));
  }
  VertexList active_vertices() const {
    VertexList out;
    for (auto& p : active) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
    return sorted_unique(std::move(out));
  }
  std::size_t order() const { return vertices().size(); }
  std::vector<VertexList> edges() const {
    std::vector<VertexList> out;
    for (auto* side : {&active, &passive})
      for (auto& p : *side)
        for (auto& e : p.edges()) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// The host graph an absorber was built in, with the copies of each vertex of
// the underlying reduced graph.
struct HostedAbsorber {
  Hypergraph host;
  std::vector<VertexList> clusters;
  Absorber absorber;
};

namespace detail {

inline VertexList union_of(const std::vector<LoosePath>& ps) {
  VertexList out;
  for (auto& p : ps) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  return out;
}

}  // namespace detail

inline std::optional<std::string> diagnose_absorber(const Hypergraph& g, const Absorber& a) {
  if (a.k != g.k()) return "uniformity mismatch";
  if (a.root.size() + 1 != a.k) return "root must have k-1 vertices";
  if (detail::repeated_vertex(a.root)) return "root repeats a vertex";
  if (a.active.size() != a.passive.size()) return "active and passive path counts differ";
  if (a.active.empty()) return "no paths";
  for (auto* side : {&a.active, &a.passive})
    for (auto& p : *side)
      if (auto why = diagnose_loose_path(g, p)) return "path invalid: " + *why;
  auto act = detail::union_of(a.active), pas = detail::union_of(a.passive);
  if (detail::repeated_vertex(act)) return "active paths are not vertex-disjoint";
  if (detail::repeated_vertex(pas)) return "passive paths are not vertex-disjoint";
  VertexList root = sorted_unique(a.root);
  VertexList pas_set = sorted_unique(pas);
  for (Vertex x : root)
    if (std::binary_search(pas_set.begin(), pas_set.end(), x)) return "root vertex " + std::to_string(x) + " on a passive path";
  VertexList expected = pas_set;
  expected.insert(expected.end(), root.begin(), root.end());
  if (sorted_unique(act) != sorted_unique(expected)) return "active vertex set is not passive set plus root";
  for (std::size_t j = 0; j < a.active.size(); ++j)
    if (a.active[j].front() != a.passive[j].front() || a.active[j].back() != a.passive[j].back())
      return "pair " + std::to_string(j) + " has different endpoints";
  return std::nullopt;
}

inline bool verify_absorber(const Hypergraph& g, const Absorber& a) { return !diagnose_absorber(g, a); }

// Berge girth of all path edges together with the extra edge X.
inline Girth absorber_girth(const Absorber& a) {
  auto edges = a.edges();
  if (a.root.size() >= 2) edges.push_back(a.root);
  return berge_girth(EdgeSequenceGraph::from_edges(std::move(edges)));
}

inline bool absorber_sparseness(const Absorber& a, std::size_t big_k) { return absorber_girth(a).at_least(big_k); }

namespace detail {

inline VertexList rotated(const VertexList& vs, std::size_t start) {
  VertexList out(vs.begin() + static_cast<std::ptrdiff_t>(start), vs.end());
  out.insert(out.end(), vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

inline VertexList checked_root(const VertexList& x, std::size_t k, std::size_t n) {
  VertexList root = sorted_unique(x);
  require(root.size() == x.size() && root.size() + 1 == k, ErrorKind::invalid_query, "root must be a (k-1)-set");
  for (Vertex v : root) require(v < n, ErrorKind::invalid_query, "root vertex out of range");
  return root;
}

inline void require_cycle_on(const Hypergraph& g, const LooseCycle& c, const VertexList& expected, const char* name) {
  if (auto why = diagnose_loose_cycle(g, c)) fail(ErrorKind::invalid_query, std::string(name) + " invalid: " + *why);
  require(sorted_unique(c.vertices) == expected, ErrorKind::invalid_query,
          std::string(name) + " does not span the required vertex set");
}

}  // namespace detail

// Absorber in the blow-up T*(2,X). With C2 rotated so that (v_1..v_k) is one
// of its windows and C1 rotated so that (w_1..w_k) is a window disjoint from
// both, the paths are
//   P11 = (v_1..v_k)
//   P21 = (v_1..v_{k-1}, vbar_k..vbar_q, vbar_1..vbar_{k-1}, v_k)
//   P22 = (w_1..w_k)
//   P12 = (w_1, wbar_2..wbar_s, wbar_1, w_2..w_k)
// where xbar = x on the root. The first such window pair in cycle order is used.
inline HostedAbsorber simple_dense_absorber(const Hypergraph& t, const VertexList& x, const LooseCycle& c1,
                                            const LooseCycle& c2) {
  const std::size_t k = t.k();
  require(k >= 3, ErrorKind::invalid_query, "absorbers need k >= 3");
  VertexList root = detail::checked_root(x, k, t.n());
  VertexList all(t.n());
  std::iota(all.begin(), all.end(), 0u);
  VertexList rest;
  std::set_difference(all.begin(), all.end(), root.begin(), root.end(), std::back_inserter(rest));
  detail::require_cycle_on(t, c1, all, "C1");
  detail::require_cycle_on(t, c2, rest, "C2");

  std::optional<std::pair<std::size_t, std::size_t>> pick;
  for (std::size_t j = 0; j < c2.edge_count() && !pick; ++j) {
    VertexList f = c2.window(j);
    for (std::size_t i = 0; i < c1.edge_count() && !pick; ++i) {
      VertexList e = c1.window(i);
      bool clash = false;
      for (Vertex v : e)
        if (std::binary_search(f.begin(), f.end(), v) || std::binary_search(root.begin(), root.end(), v)) clash = true;
      if (!clash) pick = {j, i};
    }
  }
  require(pick.has_value(), ErrorKind::invalid_query, "no window of C1 avoids both X and a window of C2");

  VertexList v = detail::rotated(c2.vertices, pick->first * (k - 1));
  VertexList w = detail::rotated(c1.vertices, pick->second * (k - 1));
  const std::size_t q = v.size(), s = w.size();
  BlowUp bu = blow_up(t, 2, root);
  auto id = [&](Vertex a) { return bu.clusters[a][0]; };
  auto bar = [&](Vertex a) { return bu.clusters[a].back(); };

  LoosePath p11{k, {}}, p21{k, {}}, p22{k, {}}, p12{k, {}};
  for (std::size_t i = 0; i < k; ++i) p11.vertices.push_back(id(v[i]));
  for (std::size_t i = 0; i + 1 < k; ++i) p21.vertices.push_back(id(v[i]));
  for (std::size_t i = k - 1; i < q; ++i) p21.vertices.push_back(bar(v[i]));
  for (std::size_t i = 0; i + 1 < k; ++i) p21.vertices.push_back(bar(v[i]));
  p21.vertices.push_back(id(v[k - 1]));
  for (std::size_t i = 0; i < k; ++i) p22.vertices.push_back(id(w[i]));
  p12.vertices.push_back(id(w[0]));
  for (std::size_t i = 1; i < s; ++i) p12.vertices.push_back(bar(w[i]));
  p12.vertices.push_back(bar(w[0]));
  for (std::size_t i = 1; i < k; ++i) p12.vertices.push_back(id(w[i]));

  VertexList host_root;
  for (Vertex r : root) host_root.push_back(id(r));
  HostedAbsorber out{std::move(bu.graph), std::move(bu.clusters), Absorber{k, host_root, {p11, p12}, {p21, p22}}};
  if (auto why = diagnose_absorber(out.host, out.absorber)) fail(ErrorKind::construction_failure, *why);
  return out;
}

struct RootedCycles {
  LooseCycle c1, c2;
  VertexList root;
};

// C2 = (0..q-1) and C1 = C2 with the k-1 roots q..q+k-2 inserted at evenly
// spaced positions, so the roots are far apart along C1.
inline RootedCycles spread_rooted_cycles(std::size_t q, std::size_t k) {
  require(k >= 3 && q >= k && q % (k - 1) == 0, ErrorKind::invalid_query, "need k >= 3 and q a multiple of k-1");
  VertexList c2(q);
  std::iota(c2.begin(), c2.end(), 0u);
  VertexList c1 = c2, root;
  const std::size_t step = (q + k - 1) / (k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    c1.insert(c1.begin() + static_cast<std::ptrdiff_t>(1 + i * step), static_cast<Vertex>(q + i));
    root.push_back(static_cast<Vertex>(q + i));
  }
  return {LooseCycle{k, c1}, LooseCycle{k, c2}, root};
}

// Least vertex that is a joint of both cycles.
inline std::optional<Vertex> shared_joint(const LooseCycle& c1, const LooseCycle& c2) {
  VertexList joints;
  for (std::size_t i = 0; i < c2.order(); i += c2.k - 1) joints.push_back(c2.vertices[i]);
  std::sort(joints.begin(), joints.end());
  for (Vertex w : joints) {
    auto it = std::find(c1.vertices.begin(), c1.vertices.end(), w);
    if (it != c1.vertices.end() && (it - c1.vertices.begin()) % static_cast<std::ptrdiff_t>(c1.k - 1) == 0) return w;
  }
  return std::nullopt;
}

// Absorber in R*(2m, X), R = C1 u C2 on vertices 0..v(C1)-1. The double strip
// is laid on the first m copies of each C2 vertex; its first strip cycle
// through B_1 is rerouted along C1 through X, and every strip cycle is cut
// open at B_1 by ending at the mirror copy in the second half of A_1.
inline HostedAbsorber allocate_absorber(const LooseCycle& c1, const LooseCycle& c2, const VertexList& x,
                                        const DoubleStrip& d) {
  const std::size_t k = c1.k;
  require(k >= 3 && c2.k == k, ErrorKind::invalid_query, "cycles must share a uniformity k >= 3");
  const std::size_t n = c1.order();
  VertexList root = detail::checked_root(x, k, n);
  std::vector<Vertex> flat;
  for (auto* c : {&c1, &c2})
    for (auto& e : c->edges()) flat.insert(flat.end(), e.begin(), e.end());
  for (Vertex v : flat) require(v < n, ErrorKind::invalid_query, "cycle vertices must be 0..v(C1)-1");
  Hypergraph r = Hypergraph::from_flat(n, k, std::move(flat));
  VertexList all(n);
  std::iota(all.begin(), all.end(), 0u);
  VertexList rest;
  std::set_difference(all.begin(), all.end(), root.begin(), root.end(), std::back_inserter(rest));
  detail::require_cycle_on(r, c1, all, "C1");
  detail::require_cycle_on(r, c2, rest, "C2");
  if (auto why = diagnose_double_strip(d)) fail(ErrorKind::invalid_query, "double strip invalid: " + *why);
  const std::size_t q = c2.order(), m = d.m();
  require(d.blocks() == q, ErrorKind::invalid_query, "double strip needs one block per vertex of C2");
  auto w = shared_joint(c1, c2);
  require(w.has_value(), ErrorKind::invalid_query, "no vertex has degree 2 in both cycles");

  VertexList s2 = detail::rotated(c2.vertices, cycle_index(c2, *w));
  VertexList s1 = detail::rotated(c1.vertices, cycle_index(c1, *w));
  std::vector<std::size_t> block_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < q; ++i) block_of[s2[i]] = i;

  BlowUp bu = blow_up(r, 2 * m, root);
  auto node = [&](Vertex strip_id) { return bu.clusters[s2[strip_id / m]][strip_id % m]; };
  auto mirror = [&](std::size_t j) { return bu.clusters[s2[0]][m + j]; };

  auto first = strip_cycles(d.first), second = strip_cycles(d.second);
  Absorber a{k, {}, {}, {}};
  for (Vertex r0 : root) a.root.push_back(bu.clusters[r0][0]);
  for (std::size_t j = 0; j < m; ++j) {
    LoosePath act{k, {}}, pas{k, {}};
    if (j == 0) {
      for (Vertex c : s1) act.vertices.push_back(block_of[c] == SIZE_MAX ? bu.clusters[c][0] : node(first[0][block_of[c]]));
    } else {
      for (Vertex id : first[j]) act.vertices.push_back(node(id));
    }
    for (Vertex id : second[j]) pas.vertices.push_back(node(id));
    act.vertices.push_back(mirror(j));
    pas.vertices.push_back(mirror(j));
    a.active.push_back(std::move(act));
    a.passive.push_back(std::move(pas));
  }
  HostedAbsorber out{std::move(bu.graph), std::move(bu.clusters), std::move(a)};
  if (auto why = diagnose_absorber(out.host, out.absorber)) fail(ErrorKind::construction_failure, *why);
  return out;
}

struct BookDensity {
  Rational value;
  Rational bound;
  bool within = false;
};

// m_k of the union of absorbers sharing one root, against 2/(k-1) + gamma.
inline BookDensity book_density_check(const std::vector<Absorber>& book, Rational gamma,
                                      std::uint64_t budget = 50'000'000) {
  require(!book.empty(), ErrorKind::invalid_query, "empty book");
  const std::size_t k = book.front().k;
  VertexList root = sorted_unique(book.front().root);
  std::vector<VertexList> seen;
  std::vector<Vertex> flat;
  Vertex top = 0;
  for (auto& a : book) {
    require(a.k == k && sorted_unique(a.root) == root, ErrorKind::invalid_query, "absorbers must share their root");
    VertexList own;
    for (Vertex v : a.active_vertices())
      if (!std::binary_search(root.begin(), root.end(), v)) own.push_back(v);
    for (auto& other : seen) {
      VertexList common;
      std::set_intersection(own.begin(), own.end(), other.begin(), other.end(), std::back_inserter(common));
      require(common.empty(), ErrorKind::invalid_query, "absorbers overlap outside the root");
    }
    seen.push_back(own);
    for (auto& e : a.edges()) {
      flat.insert(flat.end(), e.begin(), e.end());
      top = std::max(top, e.back());
    }
  }
  Hypergraph h = Hypergraph::from_flat(top + 1, k, std::move(flat));
  BookDensity out;
  out.value = k_density(h, budget);
  out.bound = Rational(2, static_cast<std::int64_t>(k - 1)) + gamma;
  out.within = out.value <= out.bound;
  return out;
}

}  // namespace hyperloose
