#pragma once

// Rayleigh block fading for two users: unit-mean exponential power gains,
// ordered so that x1 (weak user) <= x2 (strong user).

#include <cstdint>

namespace nomaec::channel {

struct OrderedChannelPair {
  double x1 = 0.0;  // weak user |h1|^2
  double x2 = 0.0;  // strong user |h2|^2

  bool valid() const noexcept;
};

/// Density of min of two unit exponentials: 2 e^{-2x}.
double pdf_weak(double x);
/// Density of max of two unit exponentials: 2 e^{-x}(1 - e^{-x}).
double pdf_strong(double x);
/// Joint density of the ordered pair, 2 e^{-(x1+x2)} on 0 <= x1 <= x2, else 0.
double joint_pdf(double x1, double x2);

/// Reproducible source of channel draws. The pair (seed, stream_id) selects a
/// Philox key/counter lane; identical pairs replay identical sequences and
/// distinct stream ids never share counters.
class ChannelRng {
 public:
  ChannelRng(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t position() const noexcept { return position_; }

  /// Two independent uniforms in the open interval (0, 1), 53-bit resolution.
  void next_uniform_pair(double& u0, double& u1) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t position_ = 0;
};

/// Two i.i.d. unit exponentials by inverse CDF, returned sorted.
OrderedChannelPair sample_pair(ChannelRng& rng) noexcept;

}  // namespace nomaec::channel
