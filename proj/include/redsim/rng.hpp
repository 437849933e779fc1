#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace redsim {

// Seeded generator with self-contained sampling routines. std::mt19937_64
// supplies the raw stream; the bounded/exponential transforms are written out
// here so that output is reproducible independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double strictly inside (0, 1).
  double open01() {
    return (static_cast<double>(gen_() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Exponential with the given rate; strictly positive.
  double exponential(double rate) { return -std::log(open01()) / rate; }

  bool bernoulli(double p) { return open01() < p; }

 private:
  std::mt19937_64 gen_;
};

// Stream-splitting mix (splitmix64 over the concatenated inputs). Used to
// derive independent per-replication / per-purpose seeds from one base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replication,
                              std::uint64_t stream) {
  std::uint64_t z = seed;
  for (std::uint64_t w : {replication + 1, stream + 0x9e3779b97f4a7c15ULL}) {
    z += w + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
  }
  return z;
}

}  // namespace redsim
