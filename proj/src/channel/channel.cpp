#include "nomaec/channel/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nomaec/channel/philox.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::channel {
namespace {

void require_nonnegative(double x, const char* what) {
  if (std::isnan(x) || x < 0.0) throw DomainError(std::string(what) + ": argument must be >= 0");
}

inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) | (lo >> 11);
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

bool OrderedChannelPair::valid() const noexcept {
  return std::isfinite(x1) && std::isfinite(x2) && x1 >= 0.0 && x1 <= x2;
}

double pdf_weak(double x) {
  require_nonnegative(x, "pdf_weak");
  return 2.0 * std::exp(-2.0 * x);
}

double pdf_strong(double x) {
  require_nonnegative(x, "pdf_strong");
  return -2.0 * std::exp(-x) * std::expm1(-x);
}

double joint_pdf(double x1, double x2) {
  require_nonnegative(x1, "joint_pdf");
  require_nonnegative(x2, "joint_pdf");
  if (x1 > x2) return 0.0;
  return 2.0 * std::exp(-(x1 + x2));
}

void ChannelRng::next_uniform_pair(double& u0, double& u1) noexcept {
  const Philox4x32::Counter counter = {
      static_cast<std::uint32_t>(position_), static_cast<std::uint32_t>(position_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const Philox4x32::Key key = {static_cast<std::uint32_t>(seed_),
                               static_cast<std::uint32_t>(seed_ >> 32)};
  const auto out = Philox4x32::block(counter, key);
  ++position_;
  u0 = to_open_unit(out[0], out[1]);
  u1 = to_open_unit(out[2], out[3]);
}

OrderedChannelPair sample_pair(ChannelRng& rng) noexcept {
  double u0, u1;
  rng.next_uniform_pair(u0, u1);
  double a = -std::log(u0);
  double b = -std::log(u1);
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace nomaec::channel
