#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hyperloose/generators.hpp"
#include "hyperloose/hypergraph.hpp"

using namespace hyperloose;

namespace {

std::size_t brute_degree(const Hypergraph& g, const VertexList& s) {
  std::size_t c = 0;
  for (auto& e : g.edge_list())
    if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++c;
  return c;
}

std::size_t brute_min_degree(const Hypergraph& g, std::size_t d) {
  std::size_t best = SIZE_MAX;
  for_each_combination(static_cast<std::uint32_t>(g.n()), static_cast<std::uint32_t>(d),
                       [&](std::span<const std::uint32_t> s) {
                         best = std::min(best, brute_degree(g, VertexList(s.begin(), s.end())));
                       });
  return best;
}

VertexList random_subset(Rng& rng, std::size_t n, std::size_t size) {
  VertexList all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  shuffle(all, rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 5}}), Error);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1}}), Error);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 1}}), Error);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}), Error);
  Hypergraph g(5, 3, {{3, 1, 0}, {0, 2, 4}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(VertexList{0, 1, 3}));
  EXPECT_FALSE(g.has_edge(VertexList{0, 1, 2}));
  EXPECT_EQ(g.vertex_degree(0), 2u);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(complete(5, 3), {0}), 6u);
  EXPECT_EQ(degree(complete(5, 3), {0, 1, 2}), 1u);
  EXPECT_EQ(degree(two_cliques(10, 3), {0}), 6u);
  EXPECT_THROW(degree(complete(5, 3), {0, 1, 2, 3}), Error);
}

TEST(Degree, MatchesBruteForceAndIsMonotone) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_hypergraph(9, 3, 0.4, trial);
    for (std::size_t s = 0; s <= 3; ++s) {
      auto set = random_subset(rng, 9, s);
      EXPECT_EQ(degree(g, set), brute_degree(g, set));
    }
    // adding an edge never lowers a degree
    auto edges = g.edge_list();
    auto extra = random_subset(rng, 9, 3);
    if (!g.has_edge(extra)) {
      edges.push_back(extra);
      Hypergraph h(9, 3, edges);
      for (Vertex v = 0; v < 9; ++v) EXPECT_GE(degree(h, {v}), degree(g, {v}));
    }
  }
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_d_degree(complete(6, 3), 1), 10u);
  EXPECT_EQ(min_d_degree(complete(6, 3), 2), 4u);
  EXPECT_EQ(min_d_degree(Hypergraph(6, 3), 1), 0u);
  EXPECT_EQ(min_d_degree(Hypergraph(6, 3), 2), 0u);
  EXPECT_THROW(min_d_degree(complete(6, 3), 3), Error);
  EXPECT_THROW(min_d_degree(complete(6, 3), 0), Error);
}

TEST(MinDegree, MatchesBruteForceAndRelativeOrdering) {
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_hypergraph(8, 4, 0.7, 100 + trial);
    for (std::size_t d = 1; d <= 3; ++d) EXPECT_EQ(min_d_degree(g, d), brute_min_degree(g, d));
    double rel1 = static_cast<double>(min_d_degree(g, 1)) / static_cast<double>(binomial(7, 3));
    for (std::size_t d = 2; d <= 3; ++d)
      EXPECT_GE(rel1 + 1e-12, static_cast<double>(min_d_degree(g, d)) / static_cast<double>(binomial(8 - d, 4 - d)));
  }
}

TEST(LinkGraph, Examples) {
  auto l = link_graph(complete(5, 3), 0);
  EXPECT_EQ(l.k(), 2u);
  EXPECT_EQ(l.edge_count(), 6u);
  EXPECT_EQ(l.vertex_degree(0), 0u);
  EXPECT_EQ(link_graph(Hypergraph(5, 3), 2).edge_count(), 0u);
  auto t = link_graph(two_cliques(10, 3), 0);
  EXPECT_EQ(t.edge_count(), 6u);
  for (Vertex v = 5; v < 10; ++v) EXPECT_EQ(t.vertex_degree(v), 0u);
  for (auto& e : t.edge_list()) EXPECT_TRUE(e[0] >= 1 && e[1] <= 4);
}

TEST(ZCount, ExamplesAndBruteForce) {
  auto c = complete(5, 3);
  EXPECT_EQ(z_count(c, {0, 1}, {1}), 0u);
  EXPECT_EQ(z_count(c, {0}, {1}), 3u);
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_hypergraph(10, 3, 0.3, trial);
    auto s = random_subset(rng, 10, trial % 3);
    auto x = random_subset(rng, 10, 1 + trial % 4);
    std::size_t brute = 0;
    for (auto& e : g.edge_list()) {
      if (!std::includes(e.begin(), e.end(), s.begin(), s.end())) continue;
      bool meets = false;
      for (Vertex v : e)
        if (std::binary_search(x.begin(), x.end(), v) && !std::binary_search(s.begin(), s.end(), v)) meets = true;
      brute += meets;
    }
    EXPECT_EQ(z_count(g, s, x), brute);
  }
}

TEST(CrossDensity, Examples) {
  EXPECT_EQ(cross_density(complete(9, 3), {{0, 1}, {2, 3, 4}, {5}}), Rational(1));
  EXPECT_EQ(cross_density(Hypergraph(9, 3), {{0, 1}, {2, 3, 4}, {5}}), Rational(0));
  EXPECT_EQ(cross_density(Hypergraph(3, 3, {{0, 1, 2}}), {{0}, {1}, {2}}), Rational(1));
  EXPECT_THROW(cross_density(complete(6, 3), {{0}, {}, {2}}), Error);
  EXPECT_THROW(cross_density(complete(6, 3), {{0, 1}, {1}, {2}}), Error);
  // one of the 2*1*2 transversals
  Hypergraph g(6, 3, {{0, 2, 3}, {0, 1, 2}});
  EXPECT_EQ(cross_density(g, {{0, 1}, {2}, {3, 4}}), Rational(1, 4));
}

TEST(PairRestricted, ExamplesAndBruteForce) {
  auto c = complete(10, 3);
  std::vector<VertexList> u{{0, 1, 2, 3}, {4, 5}, {6, 7}};
  EXPECT_EQ(pair_restricted_count(c, u, {}), 0u);
  EXPECT_EQ(pair_restricted_count(c, u, {{4, 6}}), 4u);
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_hypergraph(12, 4, 0.3, trial);
    std::vector<VertexList> parts{{0, 1}, {2, 3, 4}, {5, 6, 7}, {8, 9, 10}};
    std::vector<std::pair<Vertex, Vertex>> m;
    for (Vertex a : parts[2])
      for (Vertex b : parts[3])
        if (uniform_index(rng, 2)) m.push_back({a, b});
    std::size_t brute = 0;
    for (Vertex a : parts[0])
      for (Vertex b : parts[1])
        for (auto [x, y] : m) brute += g.has_edge_unsorted({a, b, x, y});
    EXPECT_EQ(pair_restricted_count(g, parts, m), brute);
  }
}

TEST(Generators, CompleteAndTwoCliques) {
  EXPECT_EQ(complete(6, 3).edge_count(), 20u);
  auto t = two_cliques(10, 3);
  EXPECT_EQ(t.edge_count(), 20u);
  EXPECT_EQ(min_d_degree(t, 1), 6u);
  EXPECT_THROW(two_cliques(9, 3), Error);
  for (auto& e : t.edge_list()) EXPECT_TRUE(e.back() < 5 || e.front() >= 5);
}

TEST(Generators, RandomIsReproducibleCoupledAndUnbiased) {
  EXPECT_EQ(random_hypergraph(10, 3, 0.0, 4).edge_count(), 0u);
  EXPECT_EQ(random_hypergraph(10, 3, 1.0, 4), complete(10, 3));
  EXPECT_EQ(random_hypergraph(12, 3, 0.3, 99), random_hypergraph(12, 3, 0.3, 99));
  EXPECT_THROW(random_hypergraph(5, 3, 1.5, 0), Error);
  auto lo = random_hypergraph(12, 3, 0.2, 5), hi = random_hypergraph(12, 3, 0.6, 5);
  for (auto& e : lo.edge_list()) EXPECT_TRUE(hi.has_edge(e));
  // expected count p*C(n,k) within 4 sd over 100 trials
  const double p = 0.25, total = static_cast<double>(binomial(14, 3));
  double sd = std::sqrt(total * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    double e = static_cast<double>(random_hypergraph(14, 3, p, seed).edge_count());
    EXPECT_LE(std::abs(e - p * total), 4 * sd) << seed;
  }
}

TEST(BlowUp, Examples) {
  Hypergraph edge(3, 3, {{0, 1, 2}});
  EXPECT_EQ(blow_up(edge, 2, {}).graph.edge_count(), 8u);
  auto b = blow_up(edge, 2, {0});
  EXPECT_EQ(b.graph.edge_count(), 4u);
  EXPECT_EQ(b.clusters[0].size(), 1u);
  EXPECT_EQ(b.clusters[1], (VertexList{1, 2}));
  Hypergraph two(6, 3, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(blow_up(two, 3, {}).graph.edge_count(), 54u);
}

TEST(BlowUp, FactorOneWithAllRootsIsIdentityAndTransversalsMatch) {
  for (int trial = 0; trial < 10; ++trial) {
    auto r = random_hypergraph(7, 3, 0.4, trial);
    VertexList all{0, 1, 2, 3, 4, 5, 6};
    EXPECT_EQ(blow_up(r, 1, all).graph, r);
    auto b = blow_up(r, 2, {0});
    // every transversal of a cluster triple is an edge iff its projection is
    std::vector<Vertex> owner(b.graph.n());
    for (Vertex v = 0; v < 7; ++v)
      for (Vertex c : b.clusters[v]) owner[c] = v;
    std::size_t expected = 0;
    for (auto& e : r.edge_list()) expected += (e[0] == 0 ? 1 : 2) * 4;
    EXPECT_EQ(b.graph.edge_count(), expected);
    for (auto& e : b.graph.edge_list()) EXPECT_TRUE(r.has_edge_unsorted({owner[e[0]], owner[e[1]], owner[e[2]]}));
  }
}

TEST(Contract, EmptyFamilyIsDisjointUnionOfInducedParts) {
  auto g = random_hypergraph(10, 3, 0.5, 3);
  BlockPartition p{{{0, 1, 2, 3}, {5, 6, 7, 8}}};
  auto c = contract(g, TupleFamily{2, {}}, p);
  std::size_t expected = 0;
  for (auto& e : g.edge_list()) {
    bool a = e.back() <= 3, b = e.front() >= 5 && e.back() <= 8;
    expected += a || b;
  }
  EXPECT_EQ(c.graph.edge_count(), expected);
  EXPECT_EQ(c.block_vertices, 8u);
}

TEST(Contract, HandExampleAndDoubleCount) {
  // a=0, b=1, U1 = {2,3,4}, U2 = {5}; single edge {a,u1,u2}
  Hypergraph g(6, 3, {{0, 2, 3}});
  auto c = contract(g, TupleFamily{2, {{0, 1}}}, BlockPartition{{{2, 3, 4}, {5}}});
  ASSERT_EQ(c.graph.edge_count(), 1u);
  Vertex w = static_cast<Vertex>(c.block_vertices);
  auto e = c.graph.edge(0);
  EXPECT_EQ(c.source[e[0]], 2u);
  EXPECT_EQ(c.source[e[1]], 3u);
  EXPECT_EQ(e[2], w);

  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_hypergraph(14, 3, 0.4, 50 + trial);
    TupleFamily f{2, {{0, 1}, {2, 3}}};
    BlockPartition p{{{4, 5, 6, 7, 8}, {9, 10, 11, 12, 13}}};
    auto out = contract(h, f, p);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      auto& u = p.blocks[i];
      for_each_subset_of<Vertex>(u, 3, [&](std::span<const Vertex> s) { expected += h.has_edge(s); });
      for (auto& t : f.tuples)
        for_each_subset_of<Vertex>(u, 2, [&](std::span<const Vertex> s) {
          expected += h.has_edge_unsorted({s[0], s[1], t[i]});
        });
    }
    EXPECT_EQ(out.graph.edge_count(), expected);
  }
  EXPECT_THROW(contract(g, TupleFamily{2, {{2, 1}}}, BlockPartition{{{2, 3, 4}, {5}}}), Error);
}
