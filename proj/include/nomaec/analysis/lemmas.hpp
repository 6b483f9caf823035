#pragma once

// Executable checks of the asymptotic and derivative claims for the
// two-user uplink. Every number is quadrature-backed and deterministic.

#include <string>
#include <vector>

#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/quadrature.hpp"

namespace nomaec::analysis {

enum class Comparison {
  relative,      // |observed - expected| <= tolerance * |expected|
  absolute,      // |observed - expected| <= tolerance
  at_least,      // observed >= expected - tolerance
  at_most,       // observed <= expected + tolerance
  greater_than,  // observed > expected
  less_than,     // observed < expected
};

struct LemmaCheck {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::absolute;
  bool passed = false;
};

struct LemmaReport {
  int lemma_id = 0;
  std::vector<LemmaCheck> checks;
  /// Informational lines (alternative constants, measured trends).
  std::vector<std::string> notes;

  bool overall() const noexcept;
};

struct LemmaSettings {
  double low_snr_db = -40.0;
  double high_snr_db = 60.0;
  double higher_snr_db = 70.0;
  double slope_snr_db = 40.0;  // "ρ >> 1" derivative point, also checked at high_snr_db
  double low_value_tolerance = 1e-3;
  double low_slope_rel_tolerance = 0.05;
  double high_slope_rel_tolerance = 0.10;
  double zero_slope_abs_tolerance = 1e-3;  // used when an expected slope is exactly 0
  double ceiling_rel_tolerance = 0.01;
  double flat_slope_bound = 1e-3;
  double sign_epsilon = 1e-10;
  int sign_grid_points = 20;
  double sign_grid_low_db = -40.0;
  double sign_grid_high_db = 70.0;
  numerics::QuadratureSpec quadrature;
};

/// Evaluates check comparisons and fills `passed`.
LemmaCheck make_check(std::string name, double expected, double observed, double tolerance,
                      Comparison comparison);

LemmaReport check_lemma1(const ec::PowerAllocation& pa, const ec::QosExponent& qos1,
                         const ec::QosExponent& qos2, const LemmaSettings& settings = {});
LemmaReport check_lemma2(const ec::PowerAllocation& pa, const ec::QosExponent& qos1,
                         const LemmaSettings& settings = {});
LemmaReport check_lemma3(const ec::PowerAllocation& pa, const ec::QosExponent& qos2,
                         const LemmaSettings& settings = {});
LemmaReport check_lemma4(const ec::PowerAllocation& pa, const ec::QosExponent& qos1,
                         const ec::QosExponent& qos2, const LemmaSettings& settings = {});

/// Mean gains of the ordered pair: E[min] = 1/2, E[max] = 3/2.
inline constexpr double kMeanWeakGain = 0.5;
inline constexpr double kMeanStrongGain = 1.5;

std::string to_string(Comparison c);

}  // namespace nomaec::analysis
