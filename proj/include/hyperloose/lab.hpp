#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"

namespace hyperloose {

enum class SweepMode { hamilton, resilience };
enum class AdversaryKind { random, split };

struct SweepSpec {
  std::size_t k = 3;
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  SweepMode mode = SweepMode::hamilton;
  std::size_t d = 1;
  double delta_fraction = 1.0;
  AdversaryKind adversary = AdversaryKind::random;
  std::uint64_t budget = 10'000'000;  // oracle nodes per trial
  std::size_t jobs = 1;
};

struct SweepCell {
  std::size_t k = 3, n = 0;
  double p = 0;
  std::size_t trials = 0, success = 0, failure = 0, unknown = 0;

  double probability() const { return trials ? static_cast<double>(success) / static_cast<double>(trials) : 0.0; }
};

struct SweepTable {
  std::uint64_t seed = 0;
  std::vector<SweepCell> cells;
};

// Everything here is numeric, so no field ever needs RFC-4180 quoting.
inline void write_csv(std::ostream& os, const SweepTable& t) {
  os << "# seed=" << t.seed << "\n";
  os << "k,n,p,trials,success,failure,unknown\n";
  for (auto& c : t.cells) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, c.p);
    os << c.k << ',' << c.n << ',' << std::string(buf, end) << ',' << c.trials << ',' << c.success << ','
       << c.failure << ',' << c.unknown << "\n";
  }
}

// Deletes edges in seeded random order while every d-set stays above floor.
// The split variant only touches edges crossing a random balanced bipartition.
inline Hypergraph resilience_adversary(const Hypergraph& g, std::size_t d, std::size_t floor, std::uint64_t seed,
                                       AdversaryKind kind = AdversaryKind::random) {
  const std::size_t n = g.n(), k = g.k();
  require(d >= 1 && d < k, ErrorKind::invalid_query, "d must lie in [1, k-1]");
  require(floor <= min_d_degree(g, d), ErrorKind::invalid_query, "floor exceeds the minimum d-degree");
  Rng rng = make_rng(seed, 0xad5);
  std::vector<EdgeId> order;
  if (kind == AdversaryKind::random) {
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    shuffle(order, rng);
  } else {
    // Crossing edges go first, except those made of one vertex of B and a
    // block of a fixed partition of A into (k-1)-sets; those go last. The
    // survivors then pairwise share k-1 vertices, so few fit on one cycle.
    VertexList perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    shuffle(perm, rng);
    std::vector<char> side(n, 0);
    std::vector<int> block(n, -1);
    for (std::size_t i = 0; i < n / 2; ++i) {
      side[perm[i]] = 1;
      block[perm[i]] = static_cast<int>(i / (k - 1));
    }
    std::vector<EdgeId> early, late;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto ev = g.edge(e);
      std::size_t in_a = 0;
      std::set<int> blocks;
      for (Vertex x : ev)
        if (side[x]) {
          ++in_a;
          blocks.insert(block[x]);
        }
      if (in_a == 0 || in_a == k) continue;
      bool patterned = in_a == k - 1 && blocks.size() == 1 && (n / 2) / (k - 1) > static_cast<std::size_t>(*blocks.begin());
      (patterned ? late : early).push_back(e);
    }
    shuffle(early, rng);
    shuffle(late, rng);
    order = std::move(early);
    order.insert(order.end(), late.begin(), late.end());
  }
  std::unordered_map<std::uint64_t, std::size_t> deg;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for_each_subset_of<Vertex>(g.edge(e), static_cast<std::uint32_t>(d),
                               [&](std::span<const Vertex> s) { ++deg[colex_rank(s)]; });
  std::vector<char> removed(g.edge_count(), 0);
  std::vector<std::uint64_t> keys;
  for (EdgeId e : order) {
    keys.clear();
    for_each_subset_of<Vertex>(g.edge(e), static_cast<std::uint32_t>(d),
                               [&](std::span<const Vertex> s) { keys.push_back(colex_rank(s)); });
    if (std::all_of(keys.begin(), keys.end(), [&](auto key) { return deg[key] > floor; })) {
      for (auto key : keys) --deg[key];
      removed[e] = 1;
    }
  }
  Hypergraph out = with_edges_removed(g, removed);
  if (min_d_degree(out, d) < floor) fail(ErrorKind::construction_failure, "adversary broke the degree floor");
  return out;
}

namespace detail {

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return mix_seed(mix_seed(seed, n), trial);
}

inline void check_spec(const SweepSpec& s) {
  require(s.trials >= 1, ErrorKind::invalid_query, "trials must be positive");
  require(s.k >= 2, ErrorKind::invalid_query, "uniformity below 2");
  require(!s.ns.empty() && !s.ps.empty(), ErrorKind::invalid_query, "empty grid");
  for (std::size_t i = 0; i < s.ps.size(); ++i) {
    require(s.ps[i] >= 0.0 && s.ps[i] <= 1.0, ErrorKind::invalid_query, "p must lie in [0,1]");
    require(i == 0 || s.ps[i - 1] < s.ps[i], ErrorKind::invalid_query, "p-grid must be ascending");
  }
  for (std::size_t n : s.ns) require(n % (s.k - 1) == 0, ErrorKind::invalid_query, "n divisible by k-1 required");
  if (s.mode == SweepMode::resilience) {
    require(s.d >= 1 && s.d < s.k, ErrorKind::invalid_query, "d must lie in [1, k-1]");
    require(s.delta_fraction >= 0.0 && s.delta_fraction <= 1.0, ErrorKind::invalid_query,
            "delta fraction must lie in [0,1]");
  }
}

// Runs f(task) for task in [0, count) on `jobs` threads.
template <class F>
void parallel_for(std::size_t count, std::size_t jobs, F&& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_lock;
  for (std::size_t j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Outcome per (cell, trial), reduced in index order.
inline SweepTable run_sweep(const SweepSpec& spec) {
  check_spec(spec);
  const std::size_t cells = spec.ns.size() * spec.ps.size();
  std::vector<SearchStatus> outcome(cells * spec.trials);
  parallel_for(outcome.size(), spec.jobs, [&](std::size_t task) {
    std::size_t cell = task / spec.trials, trial = task % spec.trials;
    std::size_t n = spec.ns[cell / spec.ps.size()];
    double p = spec.ps[cell % spec.ps.size()];
    std::uint64_t s = trial_seed(spec.seed, n, trial);
    Hypergraph g = random_hypergraph(n, spec.k, p, s);
    if (spec.mode == SweepMode::resilience) {
      double target = spec.delta_fraction * p * static_cast<double>(binomial(n - spec.d, spec.k - spec.d));
      std::size_t floor = std::min(static_cast<std::size_t>(std::floor(target + 1e-9)), min_d_degree(g, spec.d));
      g = resilience_adversary(g, spec.d, floor, s, spec.adversary);
    }
    outcome[task] = hamilton_oracle(g, spec.budget).status;
  });
  SweepTable t{spec.seed, {}};
  for (std::size_t cell = 0; cell < cells; ++cell) {
    SweepCell c{spec.k, spec.ns[cell / spec.ps.size()], spec.ps[cell % spec.ps.size()], spec.trials, 0, 0, 0};
    for (std::size_t i = 0; i < spec.trials; ++i) switch (outcome[cell * spec.trials + i]) {
        case SearchStatus::found: ++c.success; break;
        case SearchStatus::none: ++c.failure; break;
        case SearchStatus::unknown: ++c.unknown; break;
      }
    t.cells.push_back(c);
  }
  return t;
}

}  // namespace detail

// Trial t at order n always samples with the same seed, so raising p only
// adds edges and every per-trial indicator is monotone in p.
inline SweepTable threshold_sweep(SweepSpec spec) {
  spec.mode = SweepMode::hamilton;
  return detail::run_sweep(spec);
}

// Sample, let the adversary delete down to delta_fraction * p * C(n-d, k-d)
// (clamped to what the sample allows), then ask the oracle.
inline SweepTable resilience_sweep(SweepSpec spec) {
  spec.mode = SweepMode::resilience;
  return detail::run_sweep(spec);
}

struct ProbeConfig {
  // Concentration.
  std::size_t u_size = 50;  // each U_j, j <= k-2
  std::size_t m_size = 400;
  double eta = 0.2;
  // Upper uniformity.
  double lambda = 0.1;
  double big_d = 1.5;
  std::size_t samples = 100;
  // Regular tuples.
  double epsilon = 0.25;
  double tau = 0.5;
  // Kept only to name the rest of the hierarchy; nothing reads them.
  double zeta = 0.5, kappa = 0.5, r0 = 1, r1 = 1;
};

struct ConcentrationReport {
  std::vector<std::size_t> counts;  // Z per trial
  std::vector<double> ratios;       // Z / (p |M| prod |U_j|), 0 when p = 0
  double within = 0;           // fraction inside 1 +- eta
  double min = 0, max = 0;
};

// U_1..U_{k-2} of size u_size and m_size pairs M from U_{k-1} x U_k, all
// random and disjoint; edges are read off the coupled model directly.
inline ConcentrationReport concentration_probe(std::size_t k, std::size_t n, double p, std::size_t trials,
                                               std::uint64_t seed, const ProbeConfig& cfg = {}) {
  require(k >= 2 && trials >= 1, ErrorKind::invalid_query, "need k >= 2 and trials >= 1");
  require(p >= 0.0 && p <= 1.0, ErrorKind::invalid_query, "p must lie in [0,1]");
  std::size_t side = 1;
  while (side * side < cfg.m_size) ++side;
  require((k - 2) * cfg.u_size + 2 * side <= n, ErrorKind::invalid_query, "parts do not fit in n vertices");
  ConcentrationReport rep;
  std::size_t inside = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t s = mix_seed(seed, t);
    RandomModel model{n, k, p, s};
    Rng rng = make_rng(s, 0xc0c);
    VertexList perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    shuffle(perm, rng);
    std::vector<VertexList> u(k - 2);
    std::size_t at = 0;
    for (auto& part : u)
      for (std::size_t i = 0; i < cfg.u_size; ++i) part.push_back(perm[at++]);
    VertexList a(perm.begin() + static_cast<std::ptrdiff_t>(at), perm.begin() + static_cast<std::ptrdiff_t>(at + side));
    VertexList b(perm.begin() + static_cast<std::ptrdiff_t>(at + side),
                 perm.begin() + static_cast<std::ptrdiff_t>(at + 2 * side));
    std::vector<std::pair<Vertex, Vertex>> m;
    for (Vertex x : a)
      for (Vertex y : b) m.emplace_back(x, y);
    shuffle(m, rng);
    m.resize(cfg.m_size);
    std::size_t z = 0;
    VertexList e(k);
    std::vector<std::size_t> idx(k - 2, 0);
    for (auto [x, y] : m) {
      std::fill(idx.begin(), idx.end(), 0);
      for (bool more = true; more;) {
        for (std::size_t j = 0; j + 2 < k; ++j) e[j] = u[j][idx[j]];
        e[k - 2] = x;
        e[k - 1] = y;
        VertexList sorted = sorted_unique(e);
        z += model.contains(sorted);
        more = false;
        for (std::size_t j = k - 2; j-- > 0;) {
          if (++idx[j] < cfg.u_size) {
            more = true;
            break;
          }
          idx[j] = 0;
        }
      }
    }
    double expect = p * static_cast<double>(m.size()) * std::pow(static_cast<double>(cfg.u_size), double(k - 2));
    double r = expect > 0 ? static_cast<double>(z) / expect : 0.0;
    rep.counts.push_back(z);
    rep.ratios.push_back(r);
    inside += std::abs(r - 1.0) <= cfg.eta + 1e-12;
  }
  rep.within = static_cast<double>(inside) / static_cast<double>(trials);
  rep.min = *std::min_element(rep.ratios.begin(), rep.ratios.end());
  rep.max = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  return rep;
}

struct UniformityReport {
  bool passed = true;
  double max_ratio = 0;  // max d(X_1..X_k) / p over the samples
  std::size_t samples = 0;
};

// Sampled, not a proof. Odd samples split uniformly random vertices; even
// samples split the k*ceil(lambda n) vertices of highest degree, which is
// where a planted dense spot shows up.
inline UniformityReport upper_uniformity_probe(const Hypergraph& g, double p, double lambda, double big_d,
                                               std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.n(), k = g.k();
  require(p > 0.0 && p <= 1.0, ErrorKind::invalid_query, "p must lie in (0,1]");
  require(lambda * static_cast<double>(n) >= 1.0, ErrorKind::invalid_query, "lambda n must be at least 1");
  const auto size = static_cast<std::size_t>(std::ceil(lambda * static_cast<double>(n) - 1e-9));
  require(k * size <= n, ErrorKind::invalid_query, "k sets of size lambda n do not fit");
  Rng rng = make_rng(seed, 0x0ff);
  VertexList by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0u);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.vertex_degree(a) > g.vertex_degree(b); });
  UniformityReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    VertexList pool;
    if (s % 2 == 0) {
      pool.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(k * size));
    } else {
      pool = by_degree;
    }
    shuffle(pool, rng);
    std::vector<VertexList> parts(k);
    for (std::size_t i = 0; i < k; ++i)
      parts[i].assign(pool.begin() + static_cast<std::ptrdiff_t>(i * size),
                      pool.begin() + static_cast<std::ptrdiff_t>((i + 1) * size));
    double r = cross_density(g, parts).to_double() / p;
    rep.max_ratio = std::max(rep.max_ratio, r);
    ++rep.samples;
  }
  rep.passed = rep.max_ratio <= big_d + 1e-12;
  return rep;
}

// Exact (eps,p)-regularity of a tuple of parts of at most 12 vertices: every
// X_i inside V_i with |X_i| >= eps |V_i| has |d(X) - d(V)| <= eps p. The last
// part is not enumerated; for each size its extreme densities come from the
// heaviest and lightest vertices.
inline bool regular_tuple_check(const Hypergraph& g, const std::vector<VertexList>& parts_in, double eps, double p,
                                std::uint64_t budget = 1ull << 26) {
  const std::size_t k = g.k();
  require(parts_in.size() == k, ErrorKind::invalid_query, "need exactly k parts");
  require(eps > 0.0 && eps <= 1.0 && p > 0.0 && p <= 1.0, ErrorKind::invalid_query, "eps and p must lie in (0,1]");
  std::vector<VertexList> parts;
  for (auto& part : parts_in) {
    parts.push_back(sorted_unique(part));
    require(!parts.back().empty(), ErrorKind::invalid_query, "empty part");
    require(parts.back().size() <= 12, ErrorKind::budget_exceeded, "parts above 12 vertices are not checked exhaustively");
  }
  auto label = detail::part_labels(g.n(), parts);
  std::vector<std::size_t> min_size(k);
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < k; ++i) {
    min_size[i] = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(parts[i].size()) - 1e-9));
    min_size[i] = std::max<std::size_t>(min_size[i], 1);
    if (i + 1 < k) work *= std::uint64_t{1} << parts[i].size();
  }
  require(work <= budget, ErrorKind::budget_exceeded, "regularity check exceeds the budget");

  // Transversal edges as position tuples.
  std::vector<std::vector<std::uint8_t>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<std::uint8_t> pos(k, 0xff);
    bool ok = true;
    for (Vertex v : g.edge(e)) {
      int l = label[v];
      if (l < 0 || pos[static_cast<std::size_t>(l)] != 0xff) {
        ok = false;
        break;
      }
      auto& part = parts[static_cast<std::size_t>(l)];
      pos[static_cast<std::size_t>(l)] =
          static_cast<std::uint8_t>(std::lower_bound(part.begin(), part.end(), v) - part.begin());
    }
    if (ok) edges.push_back(std::move(pos));
  }
  double total = 1;
  for (auto& part : parts) total *= static_cast<double>(part.size());
  const double dv = static_cast<double>(edges.size()) / total;
  const double tol = eps * p + 1e-12;

  // c[x][v]: edges through position x of part k-2 and v of the last part
  // whose other positions lie in the current masks.
  const std::size_t last = parts[k - 1].size(), pen = parts[k - 2].size();
  std::vector<std::uint32_t> mask(k - 1, 0);
  std::vector<std::vector<double>> c(pen, std::vector<double>(last));
  std::vector<double> w(last);
  auto scan_last = [&]() {
    double box = 1;
    for (std::size_t j = 0; j + 1 < k; ++j) box *= std::popcount(mask[j]);
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t x = 0; x < pen; ++x)
      if (mask[k - 2] >> x & 1)
        for (std::size_t v = 0; v < last; ++v) w[v] += c[x][v];
    std::sort(w.begin(), w.end());
    double low = 0, high = 0;
    for (std::size_t s = 1; s <= last; ++s) {
      low += w[s - 1];
      high += w[last - s];
      if (s < min_size[k - 1]) continue;
      double denom = box * static_cast<double>(s);
      if (high / denom - dv > tol || dv - low / denom > tol) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i + 2 == k) {
      for (auto& row : c) std::fill(row.begin(), row.end(), 0.0);
      for (auto& e : edges) {
        bool in = true;
        for (std::size_t j = 0; j + 2 < k && in; ++j) in = mask[j] >> e[j] & 1;
        if (in) c[e[k - 2]][e[k - 1]] += 1;
      }
    }
    for (std::uint32_t m = 1; m < (1u << parts[i].size()); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) < min_size[i]) continue;
      mask[i] = m;
      if (i + 2 == k ? !scan_last() : !rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace hyperloose
