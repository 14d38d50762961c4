#pragma once

#include <array>
#include <cstdint>

namespace skypath {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Output is a pure function of (key, counter); no state is carried
/// between calls, so draws can be evaluated in any order or in parallel.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(Key key) : key_(key) {}
  /// Key derived from a 64-bit seed and a 32-bit stream id.
  Philox4x32(std::uint64_t seed, std::uint32_t stream);

  Counter operator()(Counter counter) const;

  /// Uniform in (0, 1) from a 32-bit word; never returns 0 or 1.
  static double to_open_unit(std::uint32_t word);
  /// Uniform in [0, 1) with 53 random bits from two words.
  static double to_unit53(std::uint32_t hi, std::uint32_t lo);

  /// One standard normal deviate for the given counter (Box-Muller on the
  /// first two output words).
  double normal(Counter counter) const;

 private:
  Key key_;
};

}  // namespace skypath
