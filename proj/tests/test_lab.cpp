#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperloose/lab.hpp"

using namespace hyperloose;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.k = 3;
  s.ns = {12};
  s.ps = {0.0, 0.05, 0.1, 0.3, 1.0};
  s.trials = 20;
  s.seed = 5;
  return s;
}

VertexList range_list(Vertex lo, Vertex hi) {
  VertexList v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::string csv(const SweepTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

}  // namespace

TEST(Sweep, TrivialColumns) {
  auto t = threshold_sweep(small_spec());
  ASSERT_EQ(t.cells.size(), 5u);
  EXPECT_EQ(t.cells.front().success, 0u);
  EXPECT_EQ(t.cells.front().failure, 20u);
  EXPECT_EQ(t.cells.back().success, 20u);
  for (auto& c : t.cells) EXPECT_EQ(c.success + c.failure + c.unknown, c.trials);
}

TEST(Sweep, CoupledCurveIsMonotone) {
  SweepSpec s;
  s.ns = {18};
  for (int i = 0; i < 8; ++i) s.ps.push_back(0.015 * std::pow(1.4, i));
  s.trials = 30;
  s.seed = 11;
  auto t = threshold_sweep(s);
  for (std::size_t i = 1; i < t.cells.size(); ++i) EXPECT_GE(t.cells[i].success, t.cells[i - 1].success);
  // Per trial the sampled graphs are nested.
  auto lo = random_hypergraph(18, 3, 0.05, detail::trial_seed(11, 18, 3));
  auto hi = random_hypergraph(18, 3, 0.2, detail::trial_seed(11, 18, 3));
  for (EdgeId e = 0; e < lo.edge_count(); ++e) EXPECT_TRUE(hi.has_edge(lo.edge(e)));
}

TEST(Sweep, ThreadsDoNotChangeBytes) {
  auto s = small_spec();
  s.ns = {12, 18};
  auto one = csv(threshold_sweep(s));
  s.jobs = 4;
  EXPECT_EQ(csv(threshold_sweep(s)), one);
  s.seed = 6;
  EXPECT_NE(csv(threshold_sweep(s)), one);
}

TEST(Sweep, CsvLayout) {
  auto s = small_spec();
  s.ps = {0.0, 0.25};
  s.trials = 2;
  std::istringstream in(csv(threshold_sweep(s)));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# seed=5");
  std::getline(in, line);
  EXPECT_EQ(line, "k,n,p,trials,success,failure,unknown");
  std::getline(in, line);
  EXPECT_EQ(line, "3,12,0,2,0,2,0");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 10), "3,12,0.25,");
}

TEST(Sweep, BudgetHitsAreUnknown) {
  auto s = small_spec();
  s.ps = {1.0};
  s.ns = {18};
  s.budget = 1;
  auto t = threshold_sweep(s);
  EXPECT_EQ(t.cells[0].unknown, 20u);
  EXPECT_EQ(t.cells[0].success, 0u);
}

TEST(Sweep, RejectsBadSpecs) {
  auto s = small_spec();
  s.ps = {0.5, 0.2};
  EXPECT_THROW(threshold_sweep(s), Error);
  s = small_spec();
  s.ns = {13};
  EXPECT_THROW(threshold_sweep(s), Error);
  s = small_spec();
  s.trials = 0;
  EXPECT_THROW(threshold_sweep(s), Error);
  s = small_spec();
  s.ps = {1.5};
  EXPECT_THROW(threshold_sweep(s), Error);
}

TEST(Adversary, FloorIsCertified) {
  auto g = random_hypergraph(12, 3, 0.6, 2);
  for (std::size_t d : {1u, 2u}) {
    std::size_t top = min_d_degree(g, d);
    for (std::size_t floor : {std::size_t{0}, top / 2, top})
      for (auto kind : {AdversaryKind::random, AdversaryKind::split})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          auto h = resilience_adversary(g, d, floor, seed, kind);
          EXPECT_GE(min_d_degree(h, d), floor);
          EXPECT_EQ(h.n(), g.n());
          for (EdgeId e = 0; e < h.edge_count(); ++e) EXPECT_TRUE(g.has_edge(h.edge(e)));
        }
    EXPECT_THROW(resilience_adversary(g, d, top + 1, 0), Error);
  }
}

TEST(Adversary, FloorZeroStripsMost) {
  auto g = complete(9, 3);
  auto h = resilience_adversary(g, 1, 0, 3);
  // Whatever survives has a vertex of degree one in every edge.
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto ev = h.edge(e);
    EXPECT_TRUE(std::any_of(ev.begin(), ev.end(), [&](Vertex x) { return h.vertex_degree(x) == 1; }));
  }
  EXPECT_LT(h.edge_count(), g.edge_count() / 4);
}

TEST(Adversary, SplitOnlyCutsCrossingEdges) {
  auto g = complete(12, 3);
  auto h = resilience_adversary(g, 1, 10, 4, AdversaryKind::split);
  // Floor 10 = C(5,2) lets every crossing edge go: two disjoint cliques remain.
  EXPECT_EQ(h.edge_count(), 40u);
  EXPECT_EQ(hamilton_oracle(h).status, SearchStatus::none);
  auto h2 = resilience_adversary(g, 1, 11, 4, AdversaryKind::split);
  EXPECT_GT(h2.edge_count(), 40u);
  EXPECT_EQ(min_d_degree(h2, 1), 11u);
}

TEST(Resilience, NoDeletionMatchesThreshold) {
  SweepSpec s;
  s.ns = {12};
  s.k = 3;
  s.ps = {0.15, 0.25, 0.4};
  s.trials = 40;
  s.seed = 9;
  s.d = 1;
  auto a = threshold_sweep(s);
  s.delta_fraction = 1.0;
  auto b = resilience_sweep(s);
  double tol = 2.0 / std::sqrt(40.0);
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    EXPECT_NEAR(a.cells[i].probability(), b.cells[i].probability(), tol) << i;
}

TEST(Resilience, CompleteHostSurvivesRandomAdversary) {
  SweepSpec s;
  s.k = 3;
  s.ns = {12};
  s.ps = {1.0};
  s.trials = 10;
  s.d = 2;
  s.delta_fraction = 0.9;
  auto t = resilience_sweep(s);
  EXPECT_EQ(t.cells[0].success, 10u);
  s.d = 1;
  s.delta_fraction = 0.2;
  s.adversary = AdversaryKind::split;
  t = resilience_sweep(s);
  EXPECT_GE(t.cells[0].failure, 8u);
}

TEST(Probe, ConcentrationTrivial) {
  ProbeConfig cfg;
  cfg.u_size = 10;
  cfg.m_size = 50;
  auto one = concentration_probe(3, 40, 1.0, 5, 0, cfg);
  for (double r : one.ratios) EXPECT_DOUBLE_EQ(r, 1.0);
  EXPECT_DOUBLE_EQ(one.within, 1.0);
  auto zero = concentration_probe(3, 40, 0.0, 5, 0, cfg);
  for (auto z : zero.counts) EXPECT_EQ(z, 0u);
  auto four = concentration_probe(4, 60, 1.0, 3, 0, cfg);
  EXPECT_EQ(four.counts[0], 50u * 100u);
}

TEST(Probe, ConcentrationWithinEta) {
  ProbeConfig cfg;
  cfg.u_size = 50;
  cfg.m_size = 400;
  cfg.eta = 0.2;
  auto rep = concentration_probe(3, 200, 0.1, 100, 1, cfg);
  EXPECT_GE(rep.within, 0.95);
  EXPECT_GT(rep.min, 0.7);
  EXPECT_LT(rep.max, 1.3);
}

TEST(Probe, UniformityComplete) {
  auto rep = upper_uniformity_probe(complete(20, 3), 1.0, 0.1, 1.0, 10, 0);
  EXPECT_TRUE(rep.passed);
  EXPECT_DOUBLE_EQ(rep.max_ratio, 1.0);
  EXPECT_THROW(upper_uniformity_probe(complete(20, 3), 1.0, 0.01, 1.0, 10, 0), Error);
}

TEST(Probe, UniformityFlagsPlantedSpot) {
  const std::size_t n = 100;
  auto sparse = random_hypergraph(n, 3, 0.05, 3);
  std::vector<VertexList> edges;
  for (EdgeId e = 0; e < sparse.edge_count(); ++e) {
    auto ev = sparse.edge(e);
    if (std::any_of(ev.begin(), ev.end(), [](Vertex x) { return x % 5 != 0; })) edges.emplace_back(ev.begin(), ev.end());
  }
  // Clique on 2 lambda n = 20 vertices.
  for_each_combination(20, 3, [&](std::span<const std::uint32_t> c) {
    edges.push_back({c[0] * 5, c[1] * 5, c[2] * 5});
  });
  Hypergraph g(n, 3, edges);
  auto rep = upper_uniformity_probe(g, 0.05, 0.1, 1.5, 20, 0);
  EXPECT_FALSE(rep.passed);
  EXPECT_GT(rep.max_ratio, 1.5);
}

TEST(Probe, UniformityRandomPasses) {
  std::size_t passed = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_hypergraph(100, 3, 0.2, seed);
    passed += upper_uniformity_probe(g, 0.2, 0.1, 1.5, 10, seed).passed;
  }
  EXPECT_GE(passed, 99u);
}

TEST(Probe, RegularTuples) {
  auto g = complete(12, 3);
  std::vector<VertexList> parts = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  EXPECT_TRUE(regular_tuple_check(g, parts, 0.1, 1.0));
  Hypergraph empty(12, 3, std::vector<VertexList>{});
  EXPECT_TRUE(regular_tuple_check(empty, parts, 0.1, 1.0));
  // Transversal edges only through the first half of part 0.
  std::vector<VertexList> half;
  for (Vertex a : {0u, 1u})
    for (Vertex b = 4; b < 8; ++b)
      for (Vertex c = 8; c < 12; ++c) half.push_back({a, b, c});
  Hypergraph h(12, 3, half);
  EXPECT_FALSE(regular_tuple_check(h, parts, 0.1, 1.0));
  // With eps = 1 only the whole box counts.
  EXPECT_TRUE(regular_tuple_check(h, parts, 1.0, 1.0));
  EXPECT_THROW(regular_tuple_check(complete(30, 3), {range_list(0, 13), range_list(13, 20), range_list(20, 30)}, 0.5, 1.0),
               Error);
}
