// Builds an absorbing path in a dense random 3-graph, swallows a leftover
// pair, then closes a full Hamilton cycle.
#include <cstdio>
#include <cstdlib>

#include "hyperloose/hyperloose.hpp"

using namespace hyperloose;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  auto g = random_hypergraph(60, 3, 0.9, seed);
  auto cfg = EngineConfig::toy(3);
  cfg.seed = seed;

  auto s = build_absorbing_structure(g, cfg);
  std::printf("absorbing path on %zu vertices, %zu absorbers, template of %zu edges\n", s.a.size(),
              s.absorbers.size(), s.tmpl.t.edge_count());

  VertexList w;
  for (Vertex v = 0; v < g.n() && w.size() < 2; ++v)
    if (!std::binary_search(s.a.begin(), s.a.end(), v)) w.push_back(v);
  auto p = absorb(g, s, w);
  std::printf("absorbed {%u, %u}: path of order %zu from %u to %u\n", w[0], w[1], p.order(), p.front(), p.back());

  auto c = find_hamilton_absorption(g, cfg);
  std::printf("hamilton cycle: %s\n", is_hamilton(g, c) ? "yes" : "no");
  for (std::size_t i = 0; i < c.order(); ++i) std::printf("%u%c", c.vertices[i], i + 1 < c.order() ? ' ' : '\n');
}
