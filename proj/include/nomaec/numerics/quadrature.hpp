#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on [a, inf).
//
// The half line is mapped onto [0, 1) with t = a + u / (1 - u). The interval
// with the largest error estimate is bisected until the summed estimate drops
// below max(abs_tol, rel_tol * |I|) or the subdivision budget runs out.
// Optional breakpoints seed the initial partition, so that features much
// narrower than the unit scale are sampled from the start.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "nomaec/errors.hpp"

namespace nomaec::numerics {

struct QuadratureSpec {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-12;
  int max_subdivisions = 1000;

  void validate() const {
    if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0)) {
      throw DomainError("quadrature tolerances must be strictly positive");
    }
    if (max_subdivisions < 1) {
      throw DomainError("max_subdivisions must be >= 1");
    }
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

struct KronrodRule {
  static constexpr std::array<double, 8> nodes = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> kronrod_weights = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  // Gauss weights for nodes[1], nodes[3], nodes[5] and the centre.
  static constexpr std::array<double, 4> gauss_weights = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

template <class G>
Segment apply_rule(const G& g, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(centre);
  double kronrod = KronrodRule::kronrod_weights[7] * fc;
  double gauss = KronrodRule::gauss_weights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * KronrodRule::nodes[i];
    const double pair = g(centre - dx) + g(centre + dx);
    kronrod += KronrodRule::kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += KronrodRule::gauss_weights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

/// `cuts` are ascending points inside (0, 1) that split the initial interval.
template <class G>
QuadratureResult adaptive_unit_interval(const G& g, const QuadratureSpec& spec,
                                        const std::vector<double>& cuts = {}) {
  spec.validate();
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(spec.max_subdivisions) + cuts.size() + 1);
  double lo = 0.0;
  for (double c : cuts) {
    segments.push_back(apply_rule(g, lo, c));
    lo = c;
  }
  segments.push_back(apply_rule(g, lo, 1.0));
  const auto by_error = [](const Segment& a, const Segment& b) { return a.error < b.error; };
  std::make_heap(segments.begin(), segments.end(), by_error);
  const int initial = static_cast<int>(segments.size());

  QuadratureResult result;
  while (true) {
    double total = 0.0;
    double error = 0.0;
    for (const auto& s : segments) {
      total += s.value;
      error += s.error;
    }
    result.value = total;
    result.error = error;
    result.subdivisions = static_cast<int>(segments.size()) - initial;
    if (!std::isfinite(total)) {
      result.converged = false;
      return result;
    }
    if (error <= std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total))) {
      result.converged = true;
      return result;
    }
    if (result.subdivisions >= spec.max_subdivisions) {
      result.converged = false;
      return result;
    }
    std::pop_heap(segments.begin(), segments.end(), by_error);
    const Segment worst = segments.back();
    segments.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Cannot split further in double precision.
      segments.push_back(worst);
      std::push_heap(segments.begin(), segments.end(), by_error);
      result.converged = false;
      return result;
    }
    segments.push_back(apply_rule(g, worst.lo, mid));
    std::push_heap(segments.begin(), segments.end(), by_error);
    segments.push_back(apply_rule(g, mid, worst.hi));
    std::push_heap(segments.begin(), segments.end(), by_error);
  }
}

}  // namespace detail

/// Integrates f over [a, inf). Breakpoints are absolute abscissae; those not
/// strictly above a are ignored. Never throws on non-convergence; inspect
/// `converged` or use integrate_semi_infinite_or_throw.
template <class F>
QuadratureResult integrate_semi_infinite(const F& f, double a, const QuadratureSpec& spec = {},
                                         const std::vector<double>& breakpoints = {}) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: lower limit must be finite");
  const auto mapped = [&](double u) {
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    const double ft = f(t);
    if (ft == 0.0) return 0.0;
    return ft / (one_minus * one_minus);
  };
  std::vector<double> cuts;
  for (double b : breakpoints) {
    const double offset = b - a;
    if (!(offset > 0.0) || !std::isfinite(offset)) continue;
    const double u = offset / (1.0 + offset);
    if (u < 1.0 && (cuts.empty() || u > cuts.back())) cuts.push_back(u);
  }
  return detail::adaptive_unit_interval(mapped, spec, cuts);
}

/// Decade ladder scale, 10 scale, 100 scale, ... below 1; empty when
/// scale >= 1. Useful breakpoints for integrands with a knee at `scale`.
inline std::vector<double> decade_breakpoints(double scale) {
  std::vector<double> points;
  if (!(scale > 0.0)) return points;
  for (double b = scale; b < 1.0; b *= 10.0) points.push_back(b);
  return points;
}

/// As integrate_semi_infinite, but throws AccuracyError (carrying the best
/// estimate and its error bound) when the tolerance is not met.
template <class F>
double integrate_semi_infinite_or_throw(const F& f, double a, const QuadratureSpec& spec,
                                        const char* context,
                                        const std::vector<double>& breakpoints = {}) {
  const auto r = integrate_semi_infinite(f, a, spec, breakpoints);
  if (!r.converged) {
    throw AccuracyError(std::string(context) + ": quadrature did not converge", r.value, r.error);
  }
  return r.value;
}

}  // namespace nomaec::numerics
