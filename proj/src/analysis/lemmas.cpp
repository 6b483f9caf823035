#include "nomaec/analysis/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "nomaec/analysis/derivative.hpp"
#include "nomaec/ec/quadrature_oracle.hpp"

namespace nomaec::analysis {
namespace {

using ec::PowerAllocation;
using ec::QosExponent;
using ec::Snr;
using ec::User;

constexpr double kLn2 = std::numbers::ln2;

double rho_of(double db) { return std::pow(10.0, db / 10.0); }

std::string fmt(const char* pattern, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

// The four quadrature-backed ECs as functions of linear ρ.
struct Ecs {
  PowerAllocation pa;
  QosExponent qos1;
  QosExponent qos2;
  numerics::QuadratureSpec spec;

  double ec1_noma(double rho) const {
    return ec::ec1_noma_quadrature(Snr::from_linear(rho), pa, qos1, spec).value;
  }
  double ec2_noma(double rho) const {
    return ec::ec2_noma_quadrature(Snr::from_linear(rho), pa, qos2, spec).value;
  }
  double ec1_oma(double rho) const {
    return ec::ec_oma_quadrature(Snr::from_linear(rho), qos1, User::weak, spec).value;
  }
  double ec2_oma(double rho) const {
    return ec::ec_oma_quadrature(Snr::from_linear(rho), qos2, User::strong, spec).value;
  }
};

// Relative check, switching to an absolute tolerance when the expected value is 0.
LemmaCheck relative_or_zero(std::string name, double expected, double observed, double rel_tol,
                            double zero_abs_tol) {
  if (expected == 0.0) {
    return make_check(std::move(name), 0.0, observed, zero_abs_tol, Comparison::absolute);
  }
  return make_check(std::move(name), expected, observed, rel_tol, Comparison::relative);
}

std::vector<double> sign_grid(const LemmaSettings& s) {
  std::vector<double> grid;
  const int n = s.sign_grid_points;
  for (int i = 0; i < n; ++i) {
    const double db = s.sign_grid_low_db + (s.sign_grid_high_db - s.sign_grid_low_db) * i / (n - 1);
    grid.push_back(rho_of(db));
  }
  return grid;
}

LemmaCheck min_derivative_check(const std::string& label, const SnrFunction& f,
                                const LemmaSettings& s) {
  double lowest = std::numeric_limits<double>::infinity();
  for (double rho : sign_grid(s)) lowest = std::min(lowest, d_ec_drho(f, rho));
  return make_check("min d(" + label + ")/drho over " + std::to_string(s.sign_grid_points) +
                        "-point grid >= 0",
                    0.0, lowest, s.sign_epsilon, Comparison::at_least);
}

}  // namespace

bool LemmaReport::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaCheck make_check(std::string name, double expected, double observed, double tolerance,
                      Comparison comparison) {
  LemmaCheck c{std::move(name), expected, observed, tolerance, comparison, false};
  switch (comparison) {
    case Comparison::relative:
      c.passed = std::abs(observed - expected) <= tolerance * std::abs(expected);
      break;
    case Comparison::absolute: c.passed = std::abs(observed - expected) <= tolerance; break;
    case Comparison::at_least: c.passed = observed >= expected - tolerance; break;
    case Comparison::at_most: c.passed = observed <= expected + tolerance; break;
    case Comparison::greater_than: c.passed = observed > expected; break;
    case Comparison::less_than: c.passed = observed < expected; break;
  }
  if (std::isnan(observed)) c.passed = false;
  return c;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::relative: return "relative";
    case Comparison::absolute: return "absolute";
    case Comparison::at_least: return "at_least";
    case Comparison::at_most: return "at_most";
    case Comparison::greater_than: return "greater_than";
    case Comparison::less_than: return "less_than";
  }
  return "unknown";
}

LemmaReport check_lemma1(const PowerAllocation& pa, const QosExponent& qos1,
                         const QosExponent& qos2, const LemmaSettings& s) {
  const Ecs e{pa, qos1, qos2, s.quadrature};
  LemmaReport r;
  r.lemma_id = 1;

  const double lo = rho_of(s.low_snr_db);
  const double tol = s.low_value_tolerance;
  r.checks.push_back(make_check("E1 NOMA -> 0 at low SNR", 0.0, e.ec1_noma(lo), tol, Comparison::absolute));
  r.checks.push_back(make_check("E2 NOMA -> 0 at low SNR", 0.0, e.ec2_noma(lo), tol, Comparison::absolute));
  r.checks.push_back(make_check("E1 OMA -> 0 at low SNR", 0.0, e.ec1_oma(lo), tol, Comparison::absolute));
  r.checks.push_back(make_check("E2 OMA -> 0 at low SNR", 0.0, e.ec2_oma(lo), tol, Comparison::absolute));
  r.checks.push_back(make_check("E1 NOMA - E1 OMA -> 0 at low SNR", 0.0,
                                e.ec1_noma(lo) - e.ec1_oma(lo), tol, Comparison::absolute));
  r.checks.push_back(make_check("E2 NOMA - E2 OMA -> 0 at low SNR", 0.0,
                                e.ec2_noma(lo) - e.ec2_oma(lo), tol, Comparison::absolute));

  const double hi = rho_of(s.high_snr_db);
  const double hi2 = rho_of(s.higher_snr_db);
  const double e1_hi = e.ec1_noma(hi), e1_hi2 = e.ec1_noma(hi2);
  const double o1_hi = e.ec1_oma(hi), o1_hi2 = e.ec1_oma(hi2);
  const double o2_hi = e.ec2_oma(hi), o2_hi2 = e.ec2_oma(hi2);
  const double e2_hi = e.ec2_noma(hi), e2_hi2 = e.ec2_noma(hi2);
  const double ceiling = ec::ec2_high_snr_limit(pa, qos2, s.quadrature);

  r.checks.push_back(make_check("E1 NOMA grows at high SNR", 0.0, e1_hi2 - e1_hi, 0.0, Comparison::greater_than));
  r.checks.push_back(make_check("E1 OMA grows at high SNR", 0.0, o1_hi2 - o1_hi, 0.0, Comparison::greater_than));
  r.checks.push_back(make_check("E2 OMA grows at high SNR", 0.0, o2_hi2 - o2_hi, 0.0, Comparison::greater_than));
  r.checks.push_back(make_check("E2 NOMA near ceiling at " + fmt("%g dB", s.high_snr_db), ceiling,
                                e2_hi, s.ceiling_rel_tolerance, Comparison::relative));
  r.checks.push_back(make_check("E2 NOMA near ceiling at " + fmt("%g dB", s.higher_snr_db), ceiling,
                                e2_hi2, s.ceiling_rel_tolerance, Comparison::relative));
  r.checks.push_back(make_check("E2 NOMA below ceiling", ceiling, e2_hi2, 1e-9, Comparison::at_most));
  r.checks.push_back(make_check("E1 gap positive at high SNR", 0.0, e1_hi - o1_hi, 0.0, Comparison::greater_than));
  r.checks.push_back(make_check("E1 gap increasing at high SNR", 0.0,
                                (e1_hi2 - o1_hi2) - (e1_hi - o1_hi), 0.0, Comparison::greater_than));
  r.checks.push_back(make_check("E2 gap negative at high SNR", 0.0, e2_hi - o2_hi, 0.0, Comparison::less_than));
  r.checks.push_back(make_check("E2 gap decreasing at high SNR", 0.0,
                                (e2_hi2 - o2_hi2) - (e2_hi - o2_hi), 0.0, Comparison::less_than));
  r.notes.push_back(fmt("E2 NOMA high-SNR ceiling = %.10g b/s/Hz", ceiling));
  return r;
}

LemmaReport check_lemma2(const PowerAllocation& pa, const QosExponent& qos1,
                         const LemmaSettings& s) {
  const Ecs e{pa, qos1, qos1, s.quadrature};
  LemmaReport r;
  r.lemma_id = 2;
  const SnrFunction noma = [&](double rho) { return e.ec1_noma(rho); };
  const SnrFunction oma = [&](double rho) { return e.ec1_oma(rho); };
  const SnrFunction gap = [&](double rho) { return e.ec1_noma(rho) - e.ec1_oma(rho); };

  r.checks.push_back(min_derivative_check("E1 NOMA", noma, s));
  r.checks.push_back(min_derivative_check("E1 OMA", oma, s));

  const double lo = rho_of(s.low_snr_db);
  const double low_limit = (pa.weak() - 0.5) * kMeanWeakGain / kLn2;
  r.checks.push_back(relative_or_zero("d(E1 gap)/drho at low SNR = (P1-1/2)E[x1]/ln2", low_limit,
                                      d_ec_drho(gap, lo), s.low_slope_rel_tolerance,
                                      s.zero_slope_abs_tolerance));

  for (double db : {s.slope_snr_db, s.high_snr_db}) {
    const double rho = rho_of(db);
    r.checks.push_back(make_check("d(E1 gap)/drho at " + fmt("%g dB", db) + " ~ 1/(2 rho ln2)",
                                  1.0 / (2.0 * rho * kLn2), d_ec_drho(gap, rho),
                                  s.high_slope_rel_tolerance, Comparison::relative));
  }
  for (double db : {s.slope_snr_db, s.high_snr_db, s.higher_snr_db}) {
    r.notes.push_back(fmt("E1 NOMA - E1 OMA at %g dB", db) +
                      fmt(" = %.6g b/s/Hz", gap(rho_of(db))));
  }
  return r;
}

LemmaReport check_lemma3(const PowerAllocation& pa, const QosExponent& qos2,
                         const LemmaSettings& s) {
  const Ecs e{pa, qos2, qos2, s.quadrature};
  LemmaReport r;
  r.lemma_id = 3;
  const SnrFunction noma = [&](double rho) { return e.ec2_noma(rho); };
  const SnrFunction oma = [&](double rho) { return e.ec2_oma(rho); };
  const SnrFunction gap = [&](double rho) { return e.ec2_noma(rho) - e.ec2_oma(rho); };

  r.checks.push_back(min_derivative_check("E2 NOMA", noma, s));
  r.checks.push_back(min_derivative_check("E2 OMA", oma, s));

  const double lo = rho_of(s.low_snr_db);
  const double observed_low = d_ec_drho(gap, lo);
  const double low_limit = (pa.strong() - 0.5) * kMeanStrongGain / kLn2;
  r.checks.push_back(relative_or_zero("d(E2 gap)/drho at low SNR = (P2-1/2)E[x2]/ln2", low_limit,
                                      observed_low, s.low_slope_rel_tolerance,
                                      s.zero_slope_abs_tolerance));
  const double statement_form = pa.strong() * kMeanStrongGain / (2.0 * kLn2);
  r.notes.push_back(fmt("alternative low-SNR constant P2 E[x2]/(2 ln2) = %.6g", statement_form) +
                    fmt(" (finite difference observed %.6g)", observed_low));

  for (double db : {s.slope_snr_db, s.high_snr_db}) {
    const double rho = rho_of(db);
    r.checks.push_back(make_check("d(E2 gap)/drho at " + fmt("%g dB", db) + " ~ -1/(2 rho ln2)",
                                  -1.0 / (2.0 * rho * kLn2), d_ec_drho(gap, rho),
                                  s.high_slope_rel_tolerance, Comparison::relative));
  }
  return r;
}

LemmaReport check_lemma4(const PowerAllocation& pa, const QosExponent& qos1,
                         const QosExponent& qos2, const LemmaSettings& s) {
  const Ecs e{pa, qos1, qos2, s.quadrature};
  LemmaReport r;
  r.lemma_id = 4;
  const SnrFunction v_n = [&](double rho) { return e.ec1_noma(rho) + e.ec2_noma(rho); };
  const SnrFunction v_o = [&](double rho) { return e.ec1_oma(rho) + e.ec2_oma(rho); };

  r.checks.push_back(min_derivative_check("V_N", v_n, s));
  r.checks.push_back(min_derivative_check("V_O", v_o, s));

  const double lo = rho_of(s.low_snr_db);
  r.checks.push_back(make_check("V_N -> 0 at low SNR", 0.0, v_n(lo), s.low_value_tolerance, Comparison::absolute));
  r.checks.push_back(make_check("V_O -> 0 at low SNR", 0.0, v_o(lo), s.low_value_tolerance, Comparison::absolute));

  const double vn_limit = (pa.weak() * kMeanWeakGain + pa.strong() * kMeanStrongGain) / kLn2;
  const double vo_limit = (kMeanWeakGain + kMeanStrongGain) / (2.0 * kLn2);
  r.checks.push_back(make_check("dV_N/drho at low SNR = (P1 E[x1] + P2 E[x2])/ln2", vn_limit,
                                d_ec_drho(v_n, lo), s.low_slope_rel_tolerance, Comparison::relative));
  r.checks.push_back(make_check("dV_O/drho at low SNR = (E[x1] + E[x2])/(2 ln2)", vo_limit,
                                d_ec_drho(v_o, lo), s.low_slope_rel_tolerance, Comparison::relative));

  const double hi = rho_of(s.high_snr_db);
  r.checks.push_back(make_check("dV_N/drho vanishes at high SNR", 0.0, d_ec_drho(v_n, hi),
                                s.flat_slope_bound, Comparison::at_most));
  r.checks.push_back(make_check("dV_O/drho vanishes at high SNR", 0.0, d_ec_drho(v_o, hi),
                                s.flat_slope_bound, Comparison::at_most));
  return r;
}

}  // namespace nomaec::analysis
