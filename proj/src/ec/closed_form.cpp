#include "nomaec/ec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nomaec/ec/estimate.hpp"
#include "nomaec/errors.hpp"
#include "nomaec/numerics/gamma.hpp"

namespace nomaec::ec {
namespace {

using numerics::log_hyp_u_1;
using numerics::log_scaled_upper_incomplete_gamma;

void require_band(const Snr& snr, const char* what) {
  if (snr.db() < kClosedFormMinDb || snr.db() > kClosedFormMaxDb) {
    throw AccuracyError(std::string(what) + ": SNR " + std::to_string(snr.db()) +
                            " dB is outside the closed-form band",
                        std::numeric_limits<double>::quiet_NaN(), INFINITY);
  }
}

EcEstimate closed(double log_moment_value, double beta) {
  EcEstimate e;
  e.method = EcMethod::closed_form;
  e.value = ec_from_log_moment(log_moment_value, beta);
  return e;
}

double log_sum_exp(const std::vector<double>& logs) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double v : logs) peak = std::max(peak, v);
  if (!std::isfinite(peak)) return peak;
  double s = 0.0;
  for (double v : logs) s += std::exp(v - peak);
  return peak + std::log(s);
}

}  // namespace

EcEstimate ec1_noma_closed(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos) {
  require_band(snr, "ec1_noma_closed");
  const double beta = qos.beta();
  const double z = 2.0 / (snr.linear() * pa.weak());
  return closed(std::log(z) + log_hyp_u_1(2.0 + beta, z), beta);
}

EcEstimate ec_oma_closed(const Snr& snr, const QosExponent& qos, User user) {
  require_band(snr, "ec_oma_closed");
  const double beta = qos.beta();
  const double b = 2.0 + 0.5 * beta;
  const double rho = snr.linear();
  if (user == User::weak) {
    const double z = 2.0 / rho;
    return closed(std::log(z) + log_hyp_u_1(b, z), beta);
  }
  const double w = 1.0 / rho;
  const double near = log_hyp_u_1(b, w);
  const double far = log_hyp_u_1(b, 2.0 * w);
  // U(1,b,.) is decreasing, so near > far.
  return closed(std::log(2.0 * w) + near + std::log(-std::expm1(far - near)), beta);
}

EcEstimate ec2_noma_closed(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                           const numerics::SeriesSpec& series) {
  if (!qos.has_integer_order()) {
    throw DomainError("ec2_noma_closed: the series form needs integer -beta2 (got " +
                      std::to_string(qos.beta()) + "); use ec2_noma_quadrature");
  }
  require_band(snr, "ec2_noma_closed");

  const double beta = qos.beta();
  const int order = static_cast<int>(-beta);
  const double rho = snr.linear();
  const double p1 = pa.weak();
  const double p2 = pa.strong();
  const double d = p2 - p1;
  const double a = 1.0 / (rho * p2);
  const double log_a = std::log(a);

  // The k-series expands e^{-d y} for y >= a, so its terms peak near
  // k = d·a at about e^{d a} while the sum is e^{-d a}.
  if (d * a > 300.0) {
    throw AccuracyError("ec2_noma_closed: k-series cancellation exp(2 d a) exceeds double range",
                        std::numeric_limits<double>::quiet_NaN(), INFINITY);
  }

  const double log_g_base = log_scaled_upper_incomplete_gamma(1.0 + beta, a);
  const double log_abs_d = d == 0.0 ? 0.0 : std::log(std::abs(d));

  // ln|term| of the k-series for binomial index j.
  const auto log_term = [&](int j, int k) {
    const int m = j + k;
    const double s = 2.0 + beta + m;
    const double log_g = log_scaled_upper_incomplete_gamma(s, a);
    // a^s G(s,a) (1 - G(1+β,a)/G(s,a)) = e^a [Γ(s,a) - a^{1+m} Γ(1+β,a)]
    const double log_bracket = s * log_a + log_g + std::log(-std::expm1(log_g_base - log_g));
    return k * log_abs_d - std::lgamma(k + 1.0) - std::log(1.0 + m) + log_bracket;
  };

  std::vector<double> log_parts;
  log_parts.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    const double scale = log_term(j, 0);
    const auto scaled_term = [&](std::size_t kk) {
      const int k = static_cast<int>(kk);
      if (k == 0) return 1.0;
      if (d == 0.0) return 0.0;
      const double sign = (d > 0.0 && (k % 2 == 1)) ? -1.0 : 1.0;
      return sign * std::exp(log_term(j, k) - scale);
    };
    const auto r = numerics::sum_alternating_series_or_throw(scaled_term, series, "ec2_noma_closed");
    if (!(r.value > 0.0) || r.relative_rounding_error() > kSeriesCancellationLimit) {
      throw AccuracyError("ec2_noma_closed: alternating k-series lost precision to cancellation",
                          r.value, r.relative_rounding_error());
    }
    const double log_binomial =
        std::lgamma(order + 1.0) - std::lgamma(j + 1.0) - std::lgamma(order - j + 1.0);
    log_parts.push_back(log_binomial + j * std::log(rho * p1) + scale + std::log(r.value));
  }

  const double log_e = std::log(2.0 * p2) + beta * std::log(rho) + d * a + log_sum_exp(log_parts);
  return closed(log_e, beta);
}

}  // namespace nomaec::ec
