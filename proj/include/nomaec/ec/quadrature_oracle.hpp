#pragma once

// Direct numerical integration of the defining expectations over the ordered
// exponential channel law. These are the reference values the closed forms
// and the Monte Carlo estimators are checked against.

#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/quadrature.hpp"

namespace nomaec::ec {

/// E[(1+ρP1x1)^β] over 2e^{-2x}.
EcEstimate ec1_noma_quadrature(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                               const numerics::QuadratureSpec& spec = {});

/// E[(1+ρP2x2/(1+ρP1x1))^β] over the joint ordered density: an outer adaptive
/// integral in x1 of an inner adaptive integral in x2 over [x1, ∞).
EcEstimate ec2_noma_quadrature(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                               const numerics::QuadratureSpec& spec = {});

/// E[(1+ρx_i)^{β/2}] over the weak or strong order-statistic density.
EcEstimate ec_oma_quadrature(const Snr& snr, const QosExponent& qos, User user,
                             const numerics::QuadratureSpec& spec = {});

/// High-SNR ceiling of the strong-user NOMA EC:
/// (1/β) log2 E[(1 + P2x2/(P1x1))^β], by double quadrature.
double ec2_high_snr_limit(const PowerAllocation& pa, const QosExponent& qos,
                          const numerics::QuadratureSpec& spec = {});

/// Ergodic (mean) rate E[R] in b/s/Hz for one user under either scheme.
double ergodic_rate(Scheme scheme, User user, const Snr& snr, const PowerAllocation& pa,
                    const numerics::QuadratureSpec& spec = {});

}  // namespace nomaec::ec
