#pragma once

#include <cstdint>
#include <random>

namespace capa {

// std::mt19937_64 has a standard-specified output sequence; the float
// conversion is done by hand because uniform_real_distribution is
// implementation-defined and would break cross-toolchain reproducibility.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  float uniform(float lo, float hi) {
    return static_cast<float>(lo + next_unit() * (static_cast<double>(hi) - static_cast<double>(lo)));
  }

  // Uniform integer in [0, n). Modulo bias is irrelevant at toy vocab sizes.
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace capa
