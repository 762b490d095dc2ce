#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rbmle {

// The PRNG contract is part of the dataset file format: streams are
// mt19937_64 (as standardized), uniforms take the top 53 bits, normals come
// from an explicit Box-Muller transform with the sine value cached.
// Nothing here may change without bumping the dataset format version.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stream derivation: mix(base, k) = splitmix64(base ^ splitmix64(k + 1)).
// Trials use k = trial index; policies use a second mix with the policy
// ordinal, so results do not depend on execution order.
inline std::uint64_t mix_stream(std::uint64_t base, std::uint64_t k) {
  return splitmix64(base ^ splitmix64(k + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
  }

  // Standard normal via Box-Muller; cos value returned first, sin cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rbmle
