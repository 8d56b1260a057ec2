// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "hyperloose/hyperloose.hpp"

using namespace hyperloose;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void run(int id, const char* name, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream note;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note << "threw: " << e.what();
  }
  std::printf("%s %2d %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", id, name, seconds_since(t0), note.str().c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool oracle_sanity(std::ostringstream& note) {
  struct Case {
    Hypergraph g;
    bool hamiltonian;
    const char* name;
  };
  std::vector<Case> cases = {{complete(6, 3), true, "K(6,3)"},
                             {complete(12, 4), true, "K(12,4)"},
                             {two_cliques(10, 3), false, "2K(10,3)"},
                             {two_cliques(12, 4), false, "2K(12,4)"}};
  bool ok = true;
  for (auto& c : cases) {
    auto t0 = Clock::now();
    auto r = hamilton_oracle(c.g);
    double dt = seconds_since(t0);
    bool good = c.hamiltonian ? r.found() && is_hamilton(c.g, *r.value) : r.status == SearchStatus::none;
    good = good && dt < 5.0;
    note << c.name << (good ? " ok " : " BAD ");
    ok = ok && good;
  }
  return ok;
}

bool order_constants(std::ostringstream& note) {
  std::size_t dense = 0, reservoir = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t k = i % 2 ? 4 : 3, n = k == 3 ? 30 : 39;
    auto g = random_hypergraph(n, k, 0.6, 1000 + i);
    Rng rng = make_rng(i, 0xacc);
    VertexList vs(n);
    std::iota(vs.begin(), vs.end(), 0u);
    shuffle(vs, rng);
    Vertex u = vs[0], v = vs[1];
    VertexList forbidden(vs.begin() + 2, vs.begin() + 5);
    auto p = connect_dense(g, u, v, forbidden);
    if (p.order() == 4 * (k - 1) + 1 && validate_loose_path(g, p) && p.front() == u && p.back() == v) ++dense;
    // C is most of the graph, R and Q a few vertices each.
    VertexList c(vs.begin() + 2, vs.end() - 4), r(vs.end() - 4, vs.end() - 2), q(vs.end() - 2, vs.end());
    c.insert(c.end(), r.begin(), r.end());
    auto pr = connect_through_reservoir(g, u, v, c, r, q);
    bool inside = true;
    for (std::size_t j = 1; j + 1 < pr.order(); ++j)
      inside = inside && std::find(c.begin(), c.end() - 2, pr.vertices[j]) != c.end() - 2;
    if (pr.order() == 8 * (k - 1) + 1 && validate_loose_path(g, pr) && inside) ++reservoir;
  }
  note << "dense " << dense << "/100, reservoir " << reservoir << "/100";
  return dense == 100 && reservoir == 100;
}

bool dense_absorbers(std::ostringstream& note) {
  const std::size_t k = 3;
  std::size_t good = 0, mutants_rejected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t q = 6 + 2 * (seed % 3);
    auto rc = spread_rooted_cycles(q, k);
    // Seeded relabeling of the reduced graph.
    Rng rng = make_rng(seed, 0xab5);
    VertexList label(q + k - 1);
    std::iota(label.begin(), label.end(), 0u);
    shuffle(label, rng);
    for (auto* c : {&rc.c1, &rc.c2})
      for (auto& v : c->vertices) v = label[v];
    for (auto& v : rc.root) v = label[v];
    auto h = simple_dense_absorber(complete(q + k - 1, k), rc.root, rc.c1, rc.c2);
    if (h.absorber.order() == q + 2 * k && verify_absorber(h.host, h.absorber)) ++good;

    auto swapped = h.absorber;
    std::swap(swapped.passive[0].vertices.front(), swapped.passive[0].vertices.back());
    auto leaked = h.absorber;
    leaked.passive[1].vertices[1] = leaked.root[0];
    if (!verify_absorber(h.host, swapped) && !verify_absorber(h.host, leaked)) ++mutants_rejected;
  }
  note << "valid " << good << "/100, mutants rejected " << mutants_rejected << "/100";
  return good == 100 && mutants_rejected == 100;
}

bool girth_pipeline(std::ostringstream& note) {
  const std::size_t k = 3, girth = 6;
  // D of girth >= 2K' gives K' = 3 here; the matching sparseness is K'/(k-1) rounded up.
  const std::size_t big_k_prime = girth / 2, big_k = (big_k_prime + k - 2) / (k - 1);
  std::size_t ok = 0;
  std::optional<std::size_t> min_girth;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto t0 = Clock::now();
    try {
      DoubleStripOptions opt;
      opt.girth_target = girth;
      opt.block_multiple = k - 1;
      opt.seed = seed;
      auto d = build_double_strip(16, opt);
      bool strip_ok = double_strip_girth(d).at_least(girth);
      auto rc = spread_rooted_cycles(d.blocks(), k);
      bool spread = is_K_spread(rc.c1, rc.root, big_k_prime);
      auto h = allocate_absorber(rc.c1, rc.c2, rc.root, d);
      auto ag = absorber_girth(h.absorber);
      if (ag.length) min_girth = std::min(min_girth.value_or(SIZE_MAX), *ag.length);
      if (strip_ok && spread && verify_absorber(h.host, h.absorber) && absorber_sparseness(h.absorber, big_k) &&
          seconds_since(t0) < 60.0)
        ++ok;
    } catch (const Error& e) {
      note << "[seed " << seed << ": " << e.what() << "] ";
    }
  }
  note << ok << "/10 seeds, K'=" << big_k_prime << " K=" << big_k << ", least absorber girth "
       << (min_girth ? std::to_string(*min_girth) : "inf");
  return ok >= 9;
}

bool density_bounds(std::ostringstream& note) {
  bool paths_ok = true;
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::size_t edges = 2; edges <= 7; ++edges) {
      const std::size_t n = 1 + edges * (k - 1);
      LoosePath p{k, VertexList(n)};
      std::iota(p.vertices.begin(), p.vertices.end(), 0u);
      Hypergraph h(n, k, p.edges());
      if (k_density(h) != Rational(1, static_cast<std::int64_t>(k - 1))) paths_ok = false;
    }
  note << "paths " << (paths_ok ? "ok" : "BAD");

  const std::size_t k = 3;
  const std::int64_t big_k = 4;
  std::size_t tested = 0, within = 0;
  double slowest = 0;
  for (std::uint64_t seed = 0; tested < 20 && seed < 5000; ++seed) {
    // Sizes whose connected edge subsets can still be enumerated in seconds.
    static constexpr std::pair<std::size_t, std::size_t> sizes[] = {{3, 6}, {3, 8}, {4, 6}};
    const auto [m, q] = sizes[seed % 3];
    auto rc = spread_rooted_cycles(q, k);
    auto d = random_double_strip(m, q, seed);
    auto h = allocate_absorber(rc.c1, rc.c2, rc.root, d);
    if (!absorber_sparseness(h.absorber, static_cast<std::size_t>(big_k))) continue;
    ++tested;
    auto t0 = Clock::now();
    auto r = book_density_check({h.absorber}, Rational(1, big_k * static_cast<std::int64_t>(k - 1) -
                                                              static_cast<std::int64_t>(k)));
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    if (r.within && dt < 30.0) ++within;
  }
  note << ", absorbers " << within << "/" << tested << " within bound, slowest " << slowest << "s";
  return paths_ok && tested == 20 && within == 20;
}

bool templates(std::ostringstream& note) {
  auto six = six_cycle_template();
  auto rep = check_template(six);
  // Every W inside Z below half its size, split by divisibility.
  std::size_t expect_checked = 0, expect_skipped = 0;
  const std::size_t z = six.z.size();
  for (std::uint32_t mask = 0; mask < (1u << z); ++mask) {
    std::size_t w = static_cast<std::size_t>(std::popcount(mask));
    if (w > 0 && 2 * w >= z) continue;
    ((six.t.n() - w) % six.r == 0 ? expect_checked : expect_skipped) += 1;
  }
  bool six_ok = rep.ok && rep.checked == expect_checked && rep.skipped == expect_skipped;
  auto found = find_small_template(2, 4, 3, 0, 1'000'000);
  bool found_ok = verify_template(found) && found.z.size() == 4 && found.t.n() <= 12 && found.t.edge_count() <= 12;
  note << "six-cycle checked " << rep.checked << " sets, found template on " << found.t.n() << " vertices with "
       << found.t.edge_count() << " edges";
  return six_ok && found_ok;
}

bool end_to_end(std::ostringstream& note) {
  auto t0 = Clock::now();
  auto g = complete(60, 3);
  auto cfg = EngineConfig::toy(3);
  auto c = find_hamilton_absorption(g, cfg);
  bool cycle_ok = is_hamilton(g, c);

  auto s = build_absorbing_structure(g, cfg);
  VertexList outside;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!std::binary_search(s.a.begin(), s.a.end(), v)) outside.push_back(v);
  auto covers = [&](const LoosePath& p, VertexList want) {
    return validate_loose_path(g, p) && p.front() == s.u && p.back() == s.v && spans(p, std::move(want));
  };
  VertexList w0 = s.a, w2 = s.a;
  w2.insert(w2.end(), outside.begin(), outside.begin() + 2);
  bool empty_ok = covers(absorb(g, s, {}), w0);
  bool pair_ok = covers(absorb(g, s, {outside[0], outside[1]}), w2);
  bool rejects = false;
  try {
    absorb(g, s, {outside[0]});
  } catch (const Error& e) {
    rejects = e.kind() == ErrorKind::invalid_query;
  }
  double dt = seconds_since(t0);
  note << "cycle " << (cycle_ok ? "ok" : "BAD") << ", W=0 " << (empty_ok ? "ok" : "BAD") << ", |W|=2 "
       << (pair_ok ? "ok" : "BAD") << ", |W|=1 " << (rejects ? "rejected" : "ACCEPTED");
  return cycle_ok && empty_ok && pair_ok && rejects && dt < 300.0;
}

bool spread(std::ostringstream& note) {
  auto g = complete(60, 3);
  VertexList x = {7, 30, 52};
  auto c = spread_hamilton(g, x, 8, EngineConfig::toy(3));
  bool deg = true;
  for (Vertex v : x) deg = deg && cycle_vertex_degree(c, v) == 2;
  note << "hamilton " << is_hamilton(g, c) << ", 8-spread " << is_K_spread(c, x, 8) << ", joints " << deg;
  return is_hamilton(g, c) && is_K_spread(c, x, 8) && deg;
}

bool threshold_curve(std::ostringstream& note) {
  SweepSpec s;
  s.k = 3;
  s.ns = {18};
  for (int i = 0; i < 12; ++i) s.ps.push_back(0.01 * std::pow(1.35, i));
  s.trials = 50;
  s.seed = 2024;
  s.jobs = 8;
  auto t = threshold_sweep(s);
  const double mark = 3 * std::log(18.0) / (18.0 * 18.0);
  bool monotone = true, unknown = false;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (i && t.cells[i].success < t.cells[i - 1].success) monotone = false;
    unknown = unknown || t.cells[i].unknown > 0;
    note << t.cells[i].success << (i + 1 < t.cells.size() ? "," : "");
  }
  bool brackets = s.ps.front() < mark && mark < s.ps.back();
  bool spans_range = t.cells.front().probability() <= 0.1 && t.cells.back().probability() >= 0.9;
  note << " of 50, grid brackets " << mark;
  return monotone && !unknown && brackets && spans_range;
}

bool resilience(std::ostringstream& note) {
  SweepSpec s;
  s.k = 3;
  s.ns = {12};
  s.ps = {1.0};
  s.trials = 50;
  s.seed = 7;
  s.jobs = 8;
  s.mode = SweepMode::resilience;
  s.d = 2;
  s.delta_fraction = 0.9;
  s.adversary = AdversaryKind::random;
  auto rnd = resilience_sweep(s).cells.front();
  s.d = 1;
  s.delta_fraction = 0.2;
  s.adversary = AdversaryKind::split;
  auto split = resilience_sweep(s).cells.front();
  note << "random destroyed " << rnd.failure << "/50 (unknown " << rnd.unknown << "), split destroyed "
       << split.failure << "/50 (unknown " << split.unknown << ")";
  return rnd.success == 50 && split.failure * 10 >= 8 * split.trials;
}

}  // namespace

int main() {
  run(1, "exact oracle sanity", oracle_sanity);
  run(2, "connection order constants", order_constants);
  run(3, "dense absorber suite", dense_absorbers);
  run(4, "girth pipeline", girth_pipeline);
  run(5, "density bounds", density_bounds);
  run(6, "template robustness", templates);
  run(7, "end-to-end absorption", end_to_end);
  run(8, "spread Hamiltonicity", spread);
  run(9, "threshold curve shape", threshold_curve);
  run(10, "resilience probe", resilience);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
