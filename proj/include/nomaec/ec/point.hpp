#pragma once

#include "nomaec/ec/monte_carlo.hpp"
#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/quadrature.hpp"

namespace nomaec::ec {

struct EvalOptions {
  EcMethod method = EcMethod::quadrature;
  McConfig mc;
  numerics::QuadratureSpec quadrature;
  int threads = 0;  // Monte Carlo team size; <= 0 uses the OpenMP default
};

/// All four per-user ECs at one operating point plus the sums
/// V_N = E1 + E2 (NOMA) and V_O = Ẽ1 + Ẽ2 (OMA).
struct EcPoint {
  EcEstimate ec1_noma;
  EcEstimate ec2_noma;
  EcEstimate ec1_oma;
  EcEstimate ec2_oma;
  EcEstimate v_n;
  EcEstimate v_o;
};

/// Strong-user NOMA EC by the requested deterministic method. For
/// closed_form, a non-integer β or a cancelled series falls back to the
/// quadrature oracle; the returned estimate then reports method=quadrature
/// and explains the fallback in `note`.
EcEstimate ec2_noma(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                    EcMethod method, const numerics::QuadratureSpec& spec = {});

/// One user's EC under one scheme by a deterministic method
/// (closed_form or quadrature).
EcEstimate ec_deterministic(Scheme scheme, User user, const Snr& snr, const PowerAllocation& pa,
                            const QosExponent& qos, EcMethod method,
                            const numerics::QuadratureSpec& spec = {});

EcPoint evaluate_point(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                       const QosExponent& qos2, const EvalOptions& options = {});

/// V_N or V_O by the requested method. Monte Carlo standard errors are
/// combined in quadrature.
EcEstimate sum_ec(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                  const QosExponent& qos2, Scheme scheme, const EvalOptions& options = {});

}  // namespace nomaec::ec
