#pragma once

#include "nomaec/channel/channel.hpp"
#include "nomaec/ec/types.hpp"

namespace nomaec::ec {

/// Uplink SIC rate in b/s/Hz. The strong user is decoded first and sees the
/// weak user as interference; the weak user is decoded interference-free.
double rate_noma(const Snr& snr, const PowerAllocation& pa, const channel::OrderedChannelPair& pair,
                 User user) noexcept;

/// Orthogonal access with equal resource halves and full power: ½ log2(1 + ρ x).
double rate_oma(const Snr& snr, const channel::OrderedChannelPair& pair, User user) noexcept;

/// Sum of both NOMA rates, log2(1 + ρ P1 x1 + ρ P2 x2).
double sic_sum_rate(const Snr& snr, const PowerAllocation& pa,
                    const channel::OrderedChannelPair& pair) noexcept;

}  // namespace nomaec::ec
