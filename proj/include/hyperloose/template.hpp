#pragma once

#include <bit>
#include <numeric>
#include <optional>
#include <vector>

#include "combinatorics.hpp"
#include "hypergraph.hpp"
#include "matching.hpp"
#include "random.hpp"

namespace hyperloose {

// (r,z)-template: T - W has a perfect matching for every W inside the
// flexible set Z with |W| < z/2 and v(T - W) divisible by r.
struct Template {
  std::size_t r = 2;
  Hypergraph t;
  VertexList z;
};

struct TemplateReport {
  bool ok = true;
  std::size_t checked = 0;  // sets W for which a perfect matching was required
  std::size_t skipped = 0;  // small sets W ruled out by divisibility
  std::optional<VertexList> counterexample;
};

inline TemplateReport check_template(const Template& tp) {
  require(tp.t.k() == tp.r, ErrorKind::invalid_query, "template uniformity mismatch");
  VertexList z = sorted_unique(tp.z);
  require(z.size() == tp.z.size(), ErrorKind::invalid_query, "flexible set repeats a vertex");
  for (Vertex v : z) require(v < tp.t.n(), ErrorKind::invalid_query, "flexible vertex out of range");
  require(z.size() <= 12, ErrorKind::budget_exceeded, "flexible sets above 12 vertices are not checked exhaustively");
  TemplateReport rep;
  const std::size_t n = tp.t.n();
  for (std::uint32_t mask = 0; mask < (1u << z.size()); ++mask) {
    std::size_t w = static_cast<std::size_t>(std::popcount(mask));
    if (w > 0 && 2 * w >= z.size()) continue;
    if ((n - w) % tp.r != 0) {
      ++rep.skipped;
      continue;
    }
    std::vector<char> active(n, 1);
    VertexList ws;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (mask >> i & 1) {
        active[z[i]] = 0;
        ws.push_back(z[i]);
      }
    ++rep.checked;
    if (!perfect_matching(tp.t, active)) {
      rep.ok = false;
      rep.counterexample = ws;
      return rep;
    }
  }
  return rep;
}

inline bool verify_template(const Template& tp) { return check_template(tp).ok; }

inline Template cycle_template(std::size_t len, VertexList z) {
  std::vector<VertexList> edges;
  for (Vertex i = 0; i < len; ++i) edges.push_back(sorted_unique({i, static_cast<Vertex>((i + 1) % len)}));
  return Template{2, Hypergraph(len, 2, edges), std::move(z)};
}

inline Template six_cycle_template() { return cycle_template(6, {0, 1, 2, 3}); }

// Two disjoint r-edges with the first one flexible.
inline Template matching_template(std::size_t r) {
  require(r >= 1, ErrorKind::invalid_query, "uniformity must be positive");
  VertexList a, b;
  for (Vertex i = 0; i < r; ++i) {
    a.push_back(i);
    b.push_back(static_cast<Vertex>(r + i));
  }
  return Template{r, Hypergraph(2 * r, r, {a, b}), a};
}

// Random r-graphs with v, e <= L z and v divisible by r, the first z vertices
// flexible, until one passes the check.
inline Template find_small_template(std::size_t r, std::size_t z, std::size_t big_l, std::uint64_t seed,
                                   std::uint64_t budget = 1'000'000) {
  require(r >= 2 && z >= 2, ErrorKind::invalid_query, "need r >= 2 and z >= 2");
  require(z <= 12, ErrorKind::budget_exceeded, "flexible sets above 12 vertices are not checked exhaustively");
  const std::size_t cap = big_l * z;
  std::vector<std::size_t> orders;
  for (std::size_t v = std::max(z, r); v <= cap; ++v)
    if (v % r == 0) orders.push_back(v);
  if (orders.empty()) fail(ErrorKind::construction_failure, "no admissible template order below L*z");
  Rng rng = make_rng(seed, 0x7e);
  VertexList zs(z);
  std::iota(zs.begin(), zs.end(), 0u);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    std::size_t v = orders[uniform_index(rng, orders.size())];
    std::uint64_t possible = binomial(v, r);
    std::size_t lo = v / r, hi = static_cast<std::size_t>(std::min<std::uint64_t>(cap, possible));
    if (hi < lo) continue;
    std::size_t e = lo + uniform_index(rng, hi - lo + 1);
    std::vector<VertexList> edges;
    while (edges.size() < e) {
      VertexList pick(v);
      std::iota(pick.begin(), pick.end(), 0u);
      shuffle(pick, rng);
      pick.resize(r);
      pick = sorted_unique(std::move(pick));
      if (std::find(edges.begin(), edges.end(), pick) == edges.end()) edges.push_back(std::move(pick));
    }
    Template tp{r, Hypergraph(v, r, edges), zs};
    if (verify_template(tp)) return tp;
  }
  fail(ErrorKind::construction_failure, "no template found within budget");
}

}  // namespace hyperloose
