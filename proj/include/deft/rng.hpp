#ifndef DEFT_RNG_HPP
#define DEFT_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace deft {

/// Mixes a list of 64-bit values into one seed. Used to derive independent
/// sub-streams (per epoch, per item, per replicate) from a single run seed.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

/// Deterministic random source. Every draw is computed from the raw
/// mt19937_64 output with fixed arithmetic, so a given seed produces the
/// same sequence on every platform and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal deviate (Box-Muller; consumes two uniforms per pair).
  double normal();

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace deft

#endif  // DEFT_RNG_HPP
