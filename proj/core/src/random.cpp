#include "hx/random.hpp"

#include <stdexcept>

namespace hx {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x > limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

Hypergraph random_hypergraph(long long n, long long r, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("density must be in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  if (r <= n) {
    Edge cur(r);
    for (long long i = 0; i < r; ++i) cur[i] = static_cast<int>(i);
    while (true) {
      if (rng.unit() < density) edges.push_back(cur);
      long long i = r - 1;
      while (i >= 0 && cur[i] == n - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (long long j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return Hypergraph::build(n, r, std::move(edges));
}

}  // namespace hx
