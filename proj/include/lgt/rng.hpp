#pragma once

#include <cstdint>
#include <random>

namespace lgt {

/// Seeded mt19937_64 with explicit integer and real mappings, so the drawn
/// values depend only on the raw 64-bit stream.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  /// Integer in [-k, k] as raw % (2k + 1) - k.
  std::int64_t symmetric_int(std::int64_t k) {
    return static_cast<std::int64_t>(raw() % static_cast<std::uint64_t>(2 * k + 1)) - k;
  }
  /// (raw >> 11) * 2^-53, in [0, 1).
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lgt
