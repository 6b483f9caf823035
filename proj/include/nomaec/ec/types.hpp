#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace nomaec::ec {

enum class User { weak = 1, strong = 2 };
enum class Scheme { noma, oma };
enum class EcMethod { closed_form, quadrature, monte_carlo };

std::string_view to_string(EcMethod method) noexcept;
std::string_view to_string(Scheme scheme) noexcept;
std::optional<EcMethod> parse_method(std::string_view text) noexcept;

/// Normalized transmit power split with P1 + P2 = 1. P1 is the weak user.
class PowerAllocation {
 public:
  static PowerAllocation from_weak(double p1);

  double weak() const noexcept { return p1_; }
  double strong() const noexcept { return p2_; }
  double of(User user) const noexcept { return user == User::weak ? p1_ : p2_; }

 private:
  PowerAllocation(double p1, double p2) : p1_(p1), p2_(p2) {}
  double p1_;
  double p2_;
};

/// Delay QoS exponent θ with the block product T_f·B and the normalized
/// exponent β = -θ T_f B / ln 2 (always negative).
class QosExponent {
 public:
  static QosExponent from_theta(double theta, double tf_b);
  /// Normalized exponent directly; θ is reported for T_f·B = 1.
  static QosExponent from_beta(double beta);

  double theta() const noexcept { return theta_; }
  double tf_b() const noexcept { return tf_b_; }
  double beta() const noexcept { return beta_; }
  /// True when -β is a positive integer (the domain of the EC2 series form).
  bool has_integer_order() const noexcept;

 private:
  QosExponent(double theta, double tf_b, double beta) : theta_(theta), tf_b_(tf_b), beta_(beta) {}
  double theta_;
  double tf_b_;
  double beta_;
};

/// Transmit SNR ρ = 1/σ². Linear internally, decibels at the boundary.
class Snr {
 public:
  static Snr from_db(double db);
  static Snr from_linear(double rho);

  double linear() const noexcept { return rho_; }
  double db() const noexcept { return db_; }

 private:
  Snr(double rho, double db) : rho_(rho), db_(db) {}
  double rho_;
  double db_;
};

struct EcEstimate {
  double value = 0.0;  // b/s/Hz
  EcMethod method = EcMethod::closed_form;
  double std_error = 0.0;
  std::size_t samples = 0;
  /// Non-empty when a fallback path produced the value.
  std::string note;
};

double beta_from_theta(double theta, double tf_b);

}  // namespace nomaec::ec
