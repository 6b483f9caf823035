#include "nomaec/numerics/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nomaec/errors.hpp"

namespace nomaec::numerics {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 100000;

// Legendre continued fraction for e^x x^{-s} Γ(s,x), modified Lentz.
// Converges for every real s once x >= max(1, s + 1).
double log_scaled_continued_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = std::abs(b) < kTiny ? 1.0 / kTiny : 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return std::log(h);
  }
  throw AccuracyError("incomplete gamma continued fraction did not converge", h, 0.0);
}

// ln Γ(s,x) for s > 0 and x < s + 1 via the regularized lower series.
double log_upper_by_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      // P(s,x) = x^s e^{-x} Σ / Γ(s)
      const double log_p = s * std::log(x) - x + std::log(sum) - std::lgamma(s);
      return std::lgamma(s) + std::log1p(-std::exp(log_p));
    }
  }
  throw AccuracyError("incomplete gamma series did not converge", sum, 0.0);
}

// E1(x) for 0 < x < 1 by its power series.
double exponential_integral_e1_small(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= -x / k;
    const double contribution = -term / k;
    sum += contribution;
    if (std::abs(contribution) < kEps * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) + sum;
}

// Γ(s,x) for s <= 0 and 0 < x < 1: start at s + n in [0, 1) and recurse down
// with Γ(s,x) = (Γ(s+1,x) - x^s e^{-x}) / s.
double upper_by_downward_recurrence(double s, double x) {
  const int steps = static_cast<int>(std::ceil(-s));
  const double top = s + steps;  // in [0, 1)
  double value = top == 0.0 ? exponential_integral_e1_small(x) : std::exp(log_upper_by_series(top, x));
  const double emx = std::exp(-x);
  double current = top;
  for (int i = 0; i < steps; ++i) {
    current -= 1.0;
    value = (value - std::pow(x, current) * emx) / current;
  }
  return value;
}

}  // namespace

double log_upper_incomplete_gamma(double s, double x) {
  if (!std::isfinite(s) || std::isnan(x) || x < 0.0) {
    throw DomainError("incomplete gamma: requires finite s and x >= 0");
  }
  if (x == 0.0) {
    if (s <= 0.0) throw DomainError("incomplete gamma: Γ(s, 0) diverges for s <= 0");
    return std::lgamma(s);
  }
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
  if (x >= 1.0 && x >= s + 1.0) {
    return log_scaled_continued_fraction(s, x) - x + s * std::log(x);
  }
  if (s > 0.0) return log_upper_by_series(s, x);
  return std::log(upper_by_downward_recurrence(s, x));
}

double log_scaled_upper_incomplete_gamma(double s, double x) {
  if (!std::isfinite(s) || std::isnan(x) || !(x > 0.0)) {
    throw DomainError("scaled incomplete gamma: requires finite s and x > 0");
  }
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
  if (x >= 1.0 && x >= s + 1.0) return log_scaled_continued_fraction(s, x);
  return log_upper_incomplete_gamma(s, x) + x - s * std::log(x);
}

double upper_incomplete_gamma(double s, double x) {
  return std::exp(log_upper_incomplete_gamma(s, x));
}

double log_hyp_u_1(double b, double z) {
  if (!(z > 0.0)) throw DomainError("hyp_u_1: z must be positive");
  // e^z z^{1-b} Γ(b-1, z) is exactly the scaled incomplete gamma at s = b-1.
  return log_scaled_upper_incomplete_gamma(b - 1.0, z);
}

double hyp_u_1(double b, double z) { return std::exp(log_hyp_u_1(b, z)); }

}  // namespace nomaec::numerics
