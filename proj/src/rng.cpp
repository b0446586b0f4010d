#include "cauchy_angles/rng.hpp"

#include <cmath>
#include <numbers>

namespace cauchy_angles {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_engine(RngSeed s) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) {
    return static_cast<std::uint32_t>(v >> 32);
  };
  std::seed_seq seq{lo(s.seed), hi(s.seed), lo(s.stream), hi(s.stream)};
  return std::mt19937_64(seq);
}

}  // namespace

RngSeed RngSeed::substream(std::uint64_t index) const {
  return {seed, splitmix64(stream ^ splitmix64(index + 1))};
}

Rng::Rng(RngSeed seed) : engine_(make_engine(seed)) {}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform_open();
  cached_gaussian_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

}  // namespace cauchy_angles
