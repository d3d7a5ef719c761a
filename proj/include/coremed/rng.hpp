#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string_view>

namespace coremed {

// SplitMix64 mixer, used for seed derivation. One step is enough to
// decorrelate adjacent stream ids.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of substream `stream` of `master`. Randomized routines each take a
// seed derived this way instead of sharing an engine, so results never depend
// on call order or thread schedule.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ 0x9e3779b97f4a7c15ULL * (stream + 1));
}

// Named substream ("coreset", "pool", ...). The tag is hashed with FNV-1a.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t stream) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return derive_seed(master ^ h, stream);
}

// Deterministic generator. mt19937_64 raw output is fully specified by the
// standard and every mapping below is hand rolled, so a seed reproduces the
// same stream on any conforming implementation. std::*_distribution is
// avoided on purpose (implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53 mantissa bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in {0, ..., bound-1}, exact via rejection.
  std::uint64_t uniform_int(std::uint64_t bound) {
    // 2^64 = q*bound + r; values >= q*bound would bias the modulus.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t r = (max % bound + 1) % bound;
    std::uint64_t v = eng_();
    if (r != 0) {
      const std::uint64_t top = max - r;
      while (v > top) v = eng_();
    }
    return v % bound;
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(n));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal, Box-Muller with a cached spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Standard Cauchy.
  double cauchy() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return std::tan(std::numbers::pi * (u - 0.5));
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace coremed
