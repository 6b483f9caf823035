#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

#include "nomaec/ec/types.hpp"

namespace nomaec::ec {

/// Running sums of 2^{βR} and of its deficit 1 - 2^{βR} for one batch of
/// service-rate samples. The deficit keeps full relative precision when the
/// moment is close to one (low SNR or mild β).
struct MomentBatch {
  double moment_sum = 0.0;
  double deficit_sum = 0.0;
  std::size_t count = 0;

  void add(double rate, double beta) noexcept {
    const double exponent = beta * rate * std::numbers::ln2;
    moment_sum += std::exp(exponent);
    deficit_sum += -std::expm1(exponent);
    ++count;
  }
};

/// ln E[2^{βR}] given the mean moment and mean deficit of the same samples.
double log_moment(double mean_moment, double mean_deficit);

/// EC = ln E[2^{βR}] / (β ln 2). Throws AccuracyError if the moment underflowed.
double ec_from_log_moment(double log_moment_value, double beta);

/// Monte Carlo EC from per-batch aggregates. The point estimate pools all
/// batches; std_error is the batch-means standard error of the per-batch
/// EC estimates.
EcEstimate ec_from_batches(std::span<const MomentBatch> batches, double beta);

/// Monte Carlo EC of a sequence of service rates, split into up to
/// `batches` contiguous batches for the standard error.
EcEstimate ec_monte_carlo(std::span<const double> rate_samples, double beta, int batches = 32);

}  // namespace nomaec::ec
