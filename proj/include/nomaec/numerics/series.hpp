#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "nomaec/errors.hpp"

namespace nomaec::numerics {

struct SeriesSpec {
  double relative_term_cutoff = 1e-14;
  int max_terms = 500;

  void validate() const {
    if (!(relative_term_cutoff > 0.0 && relative_term_cutoff < 1.0)) {
      throw DomainError("series cutoff must lie in (0, 1)");
    }
    if (max_terms < 1) throw DomainError("series max_terms must be >= 1");
  }
};

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double absolute_sum = 0.0;  // Σ|term|, for cancellation estimates
  bool converged = false;

  /// Rounding error estimate relative to |value|; large when the terms
  /// cancel catastrophically.
  double relative_rounding_error() const {
    constexpr double eps = 2.220446049250313e-16;
    if (value == 0.0) return absolute_sum == 0.0 ? 0.0 : INFINITY;
    return eps * (absolute_sum / std::abs(value)) * std::sqrt(static_cast<double>(terms_used));
  }
};

/// Sums term(0) + term(1) + ... with Neumaier-compensated accumulation.
/// Stops after two consecutive terms with |term| <= cutoff * |partial sum|.
/// Terms must eventually decrease in magnitude; not converging within
/// max_terms yields converged == false.
template <class Term>
SeriesResult sum_alternating_series(const Term& term, const SeriesSpec& spec = {}) {
  spec.validate();
  SeriesResult r;
  double sum = 0.0;
  double compensation = 0.0;
  int negligible_run = 0;
  for (int k = 0; k < spec.max_terms; ++k) {
    const double t = term(static_cast<std::size_t>(k));
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      compensation += (sum - next) + t;
    } else {
      compensation += (t - next) + sum;
    }
    sum = next;
    r.absolute_sum += std::abs(t);
    r.terms_used = k + 1;
    if (std::abs(t) <= spec.relative_term_cutoff * std::abs(sum + compensation)) {
      if (++negligible_run == 2) {
        r.value = sum + compensation;
        r.converged = true;
        return r;
      }
    } else {
      negligible_run = 0;
    }
  }
  r.value = sum + compensation;
  r.converged = false;
  return r;
}

/// Throwing wrapper: AccuracyError when max_terms is reached first.
template <class Term>
SeriesResult sum_alternating_series_or_throw(const Term& term, const SeriesSpec& spec,
                                             const char* context) {
  auto r = sum_alternating_series(term, spec);
  if (!r.converged) {
    throw AccuracyError(std::string(context) + ": series did not converge within max_terms",
                        r.value, std::abs(r.value));
  }
  return r;
}

}  // namespace nomaec::numerics
