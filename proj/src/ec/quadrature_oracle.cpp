#include "nomaec/ec/quadrature_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nomaec/channel/channel.hpp"
#include "nomaec/ec/estimate.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::ec {
namespace {

using numerics::decade_breakpoints;
using numerics::integrate_semi_infinite_or_throw;
using numerics::QuadratureSpec;

enum class Transform { deficit, moment };

inline double apply(Transform t, double log_term) {
  return t == Transform::deficit ? -std::expm1(log_term) : std::exp(log_term);
}

QuadratureSpec inner_spec(const QuadratureSpec& outer) {
  QuadratureSpec s = outer;
  s.relative_tolerance *= 0.1;
  s.absolute_tolerance *= 0.1;
  return s;
}

// Moments can be far below any fixed absolute tolerance (E ~ 1e-11 at high
// SNR and strict QoS), so EC integrals are controlled in relative terms only.
QuadratureSpec relative_only(QuadratureSpec spec) {
  spec.absolute_tolerance = std::numeric_limits<double>::min();
  return spec;
}

// ln E[e^{Y}] where `expect(t)` integrates the transformed log-term. The
// deficit 1 - E is used while it is at most 1/2.
template <class Expect>
double log_moment_by_quadrature(const Expect& expect) {
  const double deficit = expect(Transform::deficit);
  if (deficit <= 0.5) return std::log1p(-deficit);
  return std::log(expect(Transform::moment));
}

// E over a single order-statistic density of g(q · ln(1 + c x)).
template <class Pdf>
double log_moment_single(const Pdf& pdf, double c, double q, const QuadratureSpec& user_spec,
                         const char* context) {
  const QuadratureSpec spec = relative_only(user_spec);
  return log_moment_by_quadrature([&](Transform t) {
    return integrate_semi_infinite_or_throw(
        [&](double x) { return pdf(x) * apply(t, q * std::log1p(c * x)); }, 0.0, spec, context,
        decade_breakpoints(1.0 / c));
  });
}

// E over the joint ordered density of g(q · ln(1 + sinr(x1, x2))).
// `outer_scale` and `inner_scale(x1)` locate the knees of the integrand in
// x1 and x2.
template <class Sinr, class InnerScale>
double log_moment_joint(const Sinr& sinr, double q, double outer_scale,
                        const InnerScale& inner_scale, const QuadratureSpec& user_spec,
                        const char* context) {
  const QuadratureSpec spec = relative_only(user_spec);
  const QuadratureSpec inner = inner_spec(spec);
  const auto outer_points = decade_breakpoints(outer_scale);
  return log_moment_by_quadrature([&](Transform t) {
    const auto outer = [&](double x1) {
      return integrate_semi_infinite_or_throw(
          [&](double x2) {
            const double w = channel::joint_pdf(x1, x2);
            return w == 0.0 ? 0.0 : w * apply(t, q * std::log1p(sinr(x1, x2)));
          },
          x1, inner, context, decade_breakpoints(inner_scale(x1)));
    };
    return integrate_semi_infinite_or_throw(outer, 0.0, spec, context, outer_points);
  });
}

EcEstimate quadrature_estimate(double log_moment_value, double beta) {
  EcEstimate e;
  e.method = EcMethod::quadrature;
  e.value = ec_from_log_moment(log_moment_value, beta);
  return e;
}

}  // namespace

EcEstimate ec1_noma_quadrature(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                               const QuadratureSpec& spec) {
  const double beta = qos.beta();
  const double lm = log_moment_single([](double x) { return channel::pdf_weak(x); },
                                      snr.linear() * pa.weak(), beta, spec, "ec1_noma_quadrature");
  return quadrature_estimate(lm, beta);
}

EcEstimate ec2_noma_quadrature(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos,
                               const QuadratureSpec& spec) {
  const double beta = qos.beta();
  const double rho = snr.linear();
  const double p1 = pa.weak();
  const double p2 = pa.strong();
  const auto sinr = [=](double x1, double x2) { return rho * p2 * x2 / (1.0 + rho * p1 * x1); };
  const auto inner_scale = [=](double x1) { return (1.0 + rho * p1 * x1) / (rho * p2); };
  const double outer_scale = 1.0 / (rho * std::max(p1, p2));
  return quadrature_estimate(
      log_moment_joint(sinr, beta, outer_scale, inner_scale, spec, "ec2_noma_quadrature"), beta);
}

EcEstimate ec_oma_quadrature(const Snr& snr, const QosExponent& qos, User user,
                             const QuadratureSpec& spec) {
  const double beta = qos.beta();
  const double rho = snr.linear();
  const double lm =
      user == User::weak
          ? log_moment_single([](double x) { return channel::pdf_weak(x); }, rho, 0.5 * beta, spec,
                              "ec_oma_quadrature")
          : log_moment_single([](double x) { return channel::pdf_strong(x); }, rho, 0.5 * beta,
                              spec, "ec_oma_quadrature");
  return quadrature_estimate(lm, beta);
}

double ec2_high_snr_limit(const PowerAllocation& pa, const QosExponent& qos,
                          const QuadratureSpec& spec) {
  const double beta = qos.beta();
  const double ratio = pa.strong() / pa.weak();
  const auto sinr = [=](double x1, double x2) {
    return x1 > 0.0 ? ratio * x2 / x1 : INFINITY;
  };
  const auto no_scale = [](double) { return 1.0; };
  return ec_from_log_moment(
      log_moment_joint(sinr, beta, 1.0, no_scale, spec, "ec2_high_snr_limit"), beta);
}

double ergodic_rate(Scheme scheme, User user, const Snr& snr, const PowerAllocation& pa,
                    const QuadratureSpec& spec) {
  const double rho = snr.linear();
  const char* ctx = "ergodic_rate";
  if (scheme == Scheme::oma) {
    const auto rate = [rho](double x) { return 0.5 * std::log1p(rho * x) / std::numbers::ln2; };
    const auto points = decade_breakpoints(1.0 / rho);
    if (user == User::weak) {
      return integrate_semi_infinite_or_throw(
          [&](double x) { return channel::pdf_weak(x) * rate(x); }, 0.0, spec, ctx, points);
    }
    return integrate_semi_infinite_or_throw(
        [&](double x) { return channel::pdf_strong(x) * rate(x); }, 0.0, spec, ctx, points);
  }
  const double p1 = pa.weak();
  const double p2 = pa.strong();
  if (user == User::weak) {
    return integrate_semi_infinite_or_throw(
        [&](double x) { return channel::pdf_weak(x) * std::log1p(rho * p1 * x) / std::numbers::ln2; },
        0.0, spec, ctx, decade_breakpoints(1.0 / (rho * p1)));
  }
  const QuadratureSpec inner = inner_spec(spec);
  const auto outer = [&](double x1) {
    return integrate_semi_infinite_or_throw(
        [&](double x2) {
          const double w = channel::joint_pdf(x1, x2);
          if (w == 0.0) return 0.0;
          return w * std::log1p(rho * p2 * x2 / (1.0 + rho * p1 * x1)) / std::numbers::ln2;
        },
        x1, inner, ctx, decade_breakpoints((1.0 + rho * p1 * x1) / (rho * p2)));
  };
  return integrate_semi_infinite_or_throw(outer, 0.0, spec, ctx,
                                          decade_breakpoints(1.0 / (rho * std::max(p1, p2))));
}

}  // namespace nomaec::ec
