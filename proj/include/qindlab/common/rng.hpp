#pragma once

#include <cstdint>
#include <random>

namespace qindlab {

// Seeded random source (std::mt19937_64). The sampling helpers consume only
// raw 64-bit engine outputs, so a stream is fixed by its seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer with `count` random bits (count <= 64).
  std::uint64_t bits(int count);
  int bit() { return static_cast<int>(bits(1)); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform();

  // Standard normal (Box-Muller).
  double gaussian();

  // Independent child stream; advances this stream by one draw.
  Rng fork();

 private:
  std::mt19937_64 engine_;
  double spare_gaussian_ = 0.0;
  bool has_spare_ = false;
};

// Deterministic seed for sub-stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qindlab
