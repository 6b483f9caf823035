#include "nomaec/ec/point.hpp"

#include <cmath>
#include <string>

#include "nomaec/ec/closed_form.hpp"
#include "nomaec/ec/quadrature_oracle.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::ec {
namespace {

EcEstimate add(const EcEstimate& a, const EcEstimate& b) {
  EcEstimate s;
  s.value = a.value + b.value;
  s.method = a.method == b.method ? a.method : EcMethod::quadrature;
  if (a.method == EcMethod::monte_carlo && b.method == EcMethod::monte_carlo) {
    s.method = EcMethod::monte_carlo;
    s.std_error = std::hypot(a.std_error, b.std_error);
    s.samples = a.samples;
  }
  s.note = a.note.empty() ? b.note : (b.note.empty() ? a.note : a.note + "; " + b.note);
  return s;
}

}  // namespace

EcEstimate ec2_noma(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                    EcMethod method, const numerics::QuadratureSpec& spec) {
  if (method == EcMethod::quadrature) return ec2_noma_quadrature(snr, pa, qos, spec);
  if (method != EcMethod::closed_form) {
    throw DomainError("ec2_noma: Monte Carlo estimates come from mc_point");
  }
  std::string reason;
  try {
    return ec2_noma_closed(snr, pa, qos);
  } catch (const DomainError& e) {
    reason = e.what();
  } catch (const AccuracyError& e) {
    reason = e.what();
  }
  EcEstimate fallback = ec2_noma_quadrature(snr, pa, qos, spec);
  fallback.note = "ec2 closed form unavailable, quadrature used (" + reason + ")";
  return fallback;
}

EcEstimate ec_deterministic(Scheme scheme, User user, const Snr& snr, const PowerAllocation& pa,
                            const QosExponent& qos, EcMethod method,
                            const numerics::QuadratureSpec& spec) {
  const bool closed = method == EcMethod::closed_form;
  if (!closed && method != EcMethod::quadrature) {
    throw DomainError("ec_deterministic: method must be closed_form or quadrature");
  }
  if (scheme == Scheme::oma) {
    return closed ? ec_oma_closed(snr, qos, user) : ec_oma_quadrature(snr, qos, user, spec);
  }
  if (user == User::weak) {
    return closed ? ec1_noma_closed(snr, pa, qos) : ec1_noma_quadrature(snr, pa, qos, spec);
  }
  return ec2_noma(snr, pa, qos, method, spec);
}

EcPoint evaluate_point(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                       const QosExponent& qos2, const EvalOptions& options) {
  EcPoint p;
  if (options.method == EcMethod::monte_carlo) {
    const auto mc = mc_point(snr, pa, qos1, qos2, options.mc, options.threads);
    p.ec1_noma = mc.ec1_noma;
    p.ec2_noma = mc.ec2_noma;
    p.ec1_oma = mc.ec1_oma;
    p.ec2_oma = mc.ec2_oma;
  } else {
    const auto m = options.method;
    const auto& q = options.quadrature;
    p.ec1_noma = ec_deterministic(Scheme::noma, User::weak, snr, pa, qos1, m, q);
    p.ec2_noma = ec_deterministic(Scheme::noma, User::strong, snr, pa, qos2, m, q);
    p.ec1_oma = ec_deterministic(Scheme::oma, User::weak, snr, pa, qos1, m, q);
    p.ec2_oma = ec_deterministic(Scheme::oma, User::strong, snr, pa, qos2, m, q);
  }
  p.v_n = add(p.ec1_noma, p.ec2_noma);
  p.v_o = add(p.ec1_oma, p.ec2_oma);
  return p;
}

EcEstimate sum_ec(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                  const QosExponent& qos2, Scheme scheme, const EvalOptions& options) {
  if (options.method == EcMethod::monte_carlo) {
    const auto p = evaluate_point(snr, pa, qos1, qos2, options);
    return scheme == Scheme::noma ? p.v_n : p.v_o;
  }
  return add(ec_deterministic(scheme, User::weak, snr, pa, qos1, options.method, options.quadrature),
             ec_deterministic(scheme, User::strong, snr, pa, qos2, options.method,
                              options.quadrature));
}

}  // namespace nomaec::ec
