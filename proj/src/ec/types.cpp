#include "nomaec/ec/types.hpp"

#include <cmath>
#include <numbers>

#include "nomaec/errors.hpp"

namespace nomaec::ec {

std::string_view to_string(EcMethod method) noexcept {
  switch (method) {
    case EcMethod::closed_form: return "closed_form";
    case EcMethod::quadrature: return "quadrature";
    case EcMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

std::string_view to_string(Scheme scheme) noexcept {
  return scheme == Scheme::noma ? "NOMA" : "OMA";
}

std::optional<EcMethod> parse_method(std::string_view text) noexcept {
  if (text == "closed_form") return EcMethod::closed_form;
  if (text == "quadrature") return EcMethod::quadrature;
  if (text == "monte_carlo") return EcMethod::monte_carlo;
  return std::nullopt;
}

PowerAllocation PowerAllocation::from_weak(double p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) throw DomainError("power coefficient P1 must lie in (0, 1)");
  return PowerAllocation(p1, 1.0 - p1);
}

double beta_from_theta(double theta, double tf_b) {
  if (!(theta > 0.0) || !(tf_b > 0.0) || !std::isfinite(theta) || !std::isfinite(tf_b)) {
    throw DomainError("theta and T_f*B must be positive and finite");
  }
  return -theta * tf_b / std::numbers::ln2;
}

QosExponent QosExponent::from_theta(double theta, double tf_b) {
  return QosExponent(theta, tf_b, beta_from_theta(theta, tf_b));
}

QosExponent QosExponent::from_beta(double beta) {
  if (!(beta < 0.0) || !std::isfinite(beta)) throw DomainError("beta must be negative and finite");
  return QosExponent(-beta * std::numbers::ln2, 1.0, beta);
}

bool QosExponent::has_integer_order() const noexcept {
  return beta_ <= -1.0 && std::floor(beta_) == beta_;
}

Snr Snr::from_db(double db) {
  if (!std::isfinite(db)) throw DomainError("SNR in dB must be finite");
  return Snr(std::pow(10.0, db / 10.0), db);
}

Snr Snr::from_linear(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("linear SNR must be positive");
  return Snr(rho, 10.0 * std::log10(rho));
}

}  // namespace nomaec::ec
