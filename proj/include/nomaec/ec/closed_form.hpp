#pragma once

#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/series.hpp"

namespace nomaec::ec {

/// SNR band (dB) inside which the closed forms are evaluated. Outside it
/// they throw AccuracyError rather than degrade silently.
inline constexpr double kClosedFormMinDb = -80.0;
inline constexpr double kClosedFormMaxDb = 80.0;

/// Relative rounding-error bound above which the EC2 series is rejected as
/// cancelled.
inline constexpr double kSeriesCancellationLimit = 1e-8;

/// Weak-user NOMA EC: (1/β) log2( (2/(ρP1)) U(1, 2+β, 2/(ρP1)) ).
EcEstimate ec1_noma_closed(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos);

/// Strong-user NOMA EC by the binomial/incomplete-gamma series. Requires
/// integer -β (DomainError otherwise). Throws AccuracyError when the
/// alternating k-series cancels beyond kSeriesCancellationLimit or does not
/// converge.
EcEstimate ec2_noma_closed(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                           const numerics::SeriesSpec& series = {});

/// OMA EC (half the resources each, full power):
///   user 1: (1/β) log2( (2/ρ) U(1, 2+β/2, 2/ρ) )
///   user 2: (1/β) log2( (2/ρ) [U(1, 2+β/2, 1/ρ) - U(1, 2+β/2, 2/ρ)] )
EcEstimate ec_oma_closed(const Snr& snr, const QosExponent& qos, User user);

}  // namespace nomaec::ec
