#ifndef SPNI_RANDOM_HPP
#define SPNI_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace spni {

/// Seeded generator with a fixed, portable output sequence.
///
/// The engine is std::mt19937_64, whose outputs the C++ standard pins down
/// exactly. Standard distributions are implementation-defined, so the
/// mappings below are written out: bounded integers by rejection sampling
/// on raw 64-bit draws, probabilities from the top 53 bits.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0)
      throw std::invalid_argument("Rng::below: bound must be positive");
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Uniform in [lo, hi], lo <= hi.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    if (hi - lo == std::numeric_limits<std::uint64_t>::max())
      return next();
    return lo + below(hi - lo + 1);
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace spni

#endif // SPNI_RANDOM_HPP
