#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace aligncross {

// Derives an independent stream seed from a master seed. Used to give every
// network, shuffle and probe draw in an experiment its own reproducible
// stream.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0);

// mt19937_64 with hand-rolled distributions. The engine's sequence is pinned
// by the C++ standard; std::normal_distribution and std::shuffle are
// implementation-defined and would make seeded runs differ across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1), 53 bits of precision.
  double uniform();

  double normal(double mean = 0.0, double stddev = 1.0);

  // Uniform integer in [0, bound), bound > 0. Rejection sampled, unbiased.
  std::uint64_t below(std::uint64_t bound);

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace aligncross
