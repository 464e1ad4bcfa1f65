#ifndef QOLAB_RNG_HPP
#define QOLAB_RNG_HPP

#include <cstdint>

namespace qolab {

// splitmix64 generator. Standard-library distributions are not pinned across
// implementations, so the corpus generators roll their own sampling to keep
// seeded runs byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound must be positive.
  std::uint32_t below(std::uint32_t bound) {
    // Lemire multiply-shift; the bias is irrelevant at corpus sizes.
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) *
         bound) >>
        32);
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Stable derived seed for the i-th item of a suite.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace qolab

#endif
