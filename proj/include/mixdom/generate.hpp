#pragma once

#include <cstdint>

#include "mixdom/graph.hpp"

namespace mixdom {

// SplitMix64: the toolkit's fixed PRNG. Chosen over std engines because its
// output is pinned by construction, so seeded runs produce identical bytes on
// every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// G(n, p): each pair (u, v) with u < v is sampled once, in canonical order,
// using the top 53 bits of one draw. 0 <= p <= 1.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Uniform labeled tree from a random Pruefer sequence.
Graph gen_tree(int n, std::uint64_t seed);

Graph gen_path(int n);
Graph gen_cycle(int n);  // n >= 3
Graph gen_star(int leaves);
Graph gen_complete(int n);

}  // namespace mixdom
