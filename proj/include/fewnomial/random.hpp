#pragma once

#include <cstdint>
#include <vector>

namespace fewnomial {

/// SplitMix64 step; used to derive independent seeds from (seed, tag) pairs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

std::uint64_t hash_subset(const std::vector<int>& s);

/// Portable 64-bit generator with fixed output mapping, so seeded runs are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  double normal();

 private:
  std::uint64_t state_;
};

}  // namespace fewnomial
