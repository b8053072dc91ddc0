#pragma once

#include <cstdint>
#include <random>

#include "hx/hypergraph.hpp"

namespace hx {

/// Seeded generator with portable derived draws. std::mt19937_64 output
/// is fully specified by the standard, and the bounded/unit draws below
/// avoid std::uniform_*_distribution (whose mapping is
/// implementation-defined), so identical seeds give identical streams on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 eng_;
};

/// Hypergraph where each r-subset is present independently with the given
/// probability, decided in lexicographic subset order.
Hypergraph random_hypergraph(long long n, long long r, double density, std::uint64_t seed);

}  // namespace hx
