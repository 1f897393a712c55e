#pragma once

#include <cstdint>
#include <random>

namespace gjms {

// Seeded generator with a fixed uniform mapping. std::uniform_real_distribution
// is implementation-defined, so the 53-bit ladder is spelled out to keep check
// values identical across platforms.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double uniformSym() { return 2.0 * uniform01() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gjms
