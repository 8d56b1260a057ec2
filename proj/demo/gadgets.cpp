// The two absorber constructions side by side.
#include <cstdio>

#include "hyperloose/hyperloose.hpp"

using namespace hyperloose;

namespace {

void report(const char* name, const HostedAbsorber& h) {
  auto girth = absorber_girth(h.absorber);
  std::printf("%-10s host %zu vertices, absorber order %zu, %zu paths per state, girth %s, valid %d\n", name,
              h.host.n(), h.absorber.order(), h.absorber.active.size(),
              girth.length ? std::to_string(*girth.length).c_str() : "inf", verify_absorber(h.host, h.absorber));
}

}  // namespace

int main() {
  const std::size_t k = 3;

  auto rc = spread_rooted_cycles(8, k);
  report("dense", simple_dense_absorber(complete(8 + k - 1, k), rc.root, rc.c1, rc.c2));

  DoubleStripOptions opt;
  opt.girth_target = 6;
  opt.block_multiple = k - 1;
  auto d = build_double_strip(16, opt);
  std::printf("double strip: m=%zu q=%zu girth %zu\n", d.m(), d.blocks(), *double_strip_girth(d).length);
  auto rs = spread_rooted_cycles(d.blocks(), k);
  report("allocated", allocate_absorber(rs.c1, rs.c2, rs.root, d));

  for (std::uint64_t seed = 0;; ++seed) {
    auto small = random_double_strip(3, 8, seed);
    auto h = allocate_absorber(rc.c1, rc.c2, rc.root, small);
    if (!absorber_sparseness(h.absorber, 4)) continue;
    auto b = book_density_check({h.absorber}, Rational(1, 5));
    std::printf("4-sparse absorber from seed %lu: m_k = %s, bound %s\n", static_cast<unsigned long>(seed),
                b.value.str().c_str(), b.bound.str().c_str());
    break;
  }
}
