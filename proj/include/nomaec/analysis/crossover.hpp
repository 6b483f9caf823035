#pragma once

#include <string_view>

#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/quadrature.hpp"

namespace nomaec::analysis {

enum class CrossoverTarget { weak, strong, sum };

std::string_view to_string(CrossoverTarget target) noexcept;

struct CrossoverSettings {
  double low_db = 0.0;
  double high_db = 40.0;
  double root_tolerance_db = 0.1;
  numerics::QuadratureSpec quadrature;
};

/// Zero of the NOMA minus OMA gap (per-user EC, or V_N - V_O) in decibels.
/// When the gap does not change sign over the bracket, `found` is false and
/// only the endpoint gaps are meaningful.
struct CrossoverResult {
  CrossoverTarget target = CrossoverTarget::weak;
  bool found = false;
  double rho_star_db = 0.0;
  double low_db = 0.0;
  double high_db = 0.0;
  double achieved_gap = 0.0;
  double gap_at_low = 0.0;
  double gap_at_high = 0.0;
  int iterations = 0;
};

/// NOMA minus OMA EC for the target at one SNR, by quadrature.
double ec_gap(CrossoverTarget target, const ec::Snr& snr, const ec::PowerAllocation& pa,
              const ec::QosExponent& qos1, const ec::QosExponent& qos2,
              const numerics::QuadratureSpec& spec = {});

CrossoverResult find_crossover(CrossoverTarget target, const ec::PowerAllocation& pa,
                               const ec::QosExponent& qos1, const ec::QosExponent& qos2,
                               const CrossoverSettings& settings = {});

struct SchemeChoice {
  ec::Scheme scheme = ec::Scheme::noma;
  /// NOMA EC minus OMA EC for the user.
  double gap = 0.0;
};

/// The scheme with the larger EC for `user`; a tie selects NOMA.
SchemeChoice select_scheme(ec::User user, const ec::Snr& snr, const ec::PowerAllocation& pa,
                           const ec::QosExponent& qos1, const ec::QosExponent& qos2,
                           const numerics::QuadratureSpec& spec = {});

}  // namespace nomaec::analysis
