#pragma once

#include <cstdint>
#include <random>

namespace cauchy_angles {

/// Seed plus sub-stream selector. Identical pairs give identical sequences on
/// every platform.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Child stream `index` of this one. Distinct indices give independent
  /// generators.
  RngSeed substream(std::uint64_t index) const;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Deterministic 64-bit generator. Only fully specified standard components
/// (mt19937_64, seed_seq) are used; the real-valued draws are derived here
/// because the std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(RngSeed seed);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard Gaussian via Box-Muller. The second variate of each pair is
  /// cached.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cauchy_angles
