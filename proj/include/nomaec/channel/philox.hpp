#pragma once

#include <array>
#include <cstdint>

namespace nomaec::channel {

/// Philox4x32-10 counter-based block function (Salmon et al., Random123).
/// Maps a 128-bit counter and a 64-bit key to 128 random bits; distinct
/// counters give independent outputs, so streams never overlap.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr int kRounds = 10;

  static Counter block(Counter counter, Key key) noexcept;
};

}  // namespace nomaec::channel
