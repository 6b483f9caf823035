#include "nomaec/ec/rates.hpp"

#include <cmath>
#include <numbers>

namespace nomaec::ec {

double rate_noma(const Snr& snr, const PowerAllocation& pa, const channel::OrderedChannelPair& pair,
                 User user) noexcept {
  const double rho = snr.linear();
  const double weak_rx = rho * pa.weak() * pair.x1;
  if (user == User::weak) return std::log1p(weak_rx) / std::numbers::ln2;
  const double sinr = rho * pa.strong() * pair.x2 / (1.0 + weak_rx);
  return std::log1p(sinr) / std::numbers::ln2;
}

double rate_oma(const Snr& snr, const channel::OrderedChannelPair& pair, User user) noexcept {
  const double x = user == User::weak ? pair.x1 : pair.x2;
  return 0.5 * std::log1p(snr.linear() * x) / std::numbers::ln2;
}

double sic_sum_rate(const Snr& snr, const PowerAllocation& pa,
                    const channel::OrderedChannelPair& pair) noexcept {
  const double rho = snr.linear();
  return std::log1p(rho * pa.weak() * pair.x1 + rho * pa.strong() * pair.x2) / std::numbers::ln2;
}

}  // namespace nomaec::ec
