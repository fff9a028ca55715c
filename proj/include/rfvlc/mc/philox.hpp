#pragma once
#ifndef RFVLC_MC_PHILOX_HPP
#define RFVLC_MC_PHILOX_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace rfvlc::mc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Output depends only on (key, counter), so independent substreams are obtained
/// by fixing the key to the run seed and putting the substream index in the upper
/// half of the counter.  Satisfies UniformRandomBitGenerator with 64-bit output.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        counter_{0u, 0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 2) {
      buffer_ = generate(counter_, key_);
      increment();
      pos_ = 0;
    }
    const auto lo = static_cast<std::uint64_t>(buffer_[2 * pos_]);
    const auto hi = static_cast<std::uint64_t>(buffer_[2 * pos_ + 1]);
    ++pos_;
    return (hi << 32) | lo;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1).
  double uniform_open() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  static Block generate(Block ctr, Key key) {
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
      key[0] += kW0;
      key[1] += kW1;
    }
    return ctr;
  }

 private:
  void increment() {
    if (++counter_[0] == 0) ++counter_[1];
  }

  Key key_;
  Block counter_;
  Block buffer_{};
  int pos_ = 2;
};

}  // namespace rfvlc::mc

#endif  // RFVLC_MC_PHILOX_HPP
