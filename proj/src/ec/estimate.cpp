#include "nomaec/ec/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nomaec/errors.hpp"

namespace nomaec::ec {

double log_moment(double mean_moment, double mean_deficit) {
  if (mean_deficit <= 0.5) return std::log1p(-mean_deficit);
  return std::log(mean_moment);
}

double ec_from_log_moment(double log_moment_value, double beta) {
  if (!std::isfinite(log_moment_value)) {
    throw AccuracyError("EC moment E[2^(beta R)] underflowed", log_moment_value, INFINITY);
  }
  return log_moment_value / (beta * std::numbers::ln2);
}

EcEstimate ec_from_batches(std::span<const MomentBatch> batches, double beta) {
  if (!(beta < 0.0)) throw DomainError("ec_monte_carlo: beta must be negative");
  MomentBatch pooled;
  for (const auto& b : batches) {
    pooled.moment_sum += b.moment_sum;
    pooled.deficit_sum += b.deficit_sum;
    pooled.count += b.count;
  }
  if (pooled.count == 0) throw DomainError("ec_monte_carlo: no samples");

  const auto batch_ec = [beta](const MomentBatch& b) {
    const double n = static_cast<double>(b.count);
    return ec_from_log_moment(log_moment(b.moment_sum / n, b.deficit_sum / n), beta);
  };

  EcEstimate out;
  out.method = EcMethod::monte_carlo;
  out.samples = pooled.count;
  out.value = batch_ec(pooled);

  std::vector<double> per_batch;
  for (const auto& b : batches) {
    if (b.count > 0) per_batch.push_back(batch_ec(b));
  }
  if (per_batch.size() >= 2) {
    double mean = 0.0;
    for (double v : per_batch) mean += v;
    mean /= static_cast<double>(per_batch.size());
    double ss = 0.0;
    for (double v : per_batch) ss += (v - mean) * (v - mean);
    const double k = static_cast<double>(per_batch.size());
    out.std_error = std::sqrt(ss / (k * (k - 1.0)));
  }
  return out;
}

EcEstimate ec_monte_carlo(std::span<const double> rate_samples, double beta, int batches) {
  if (rate_samples.empty()) throw DomainError("ec_monte_carlo: empty sample sequence");
  if (batches < 1) throw DomainError("ec_monte_carlo: need at least one batch");
  const std::size_t n = rate_samples.size();
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(batches), n);
  std::vector<MomentBatch> acc(k);
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t lo = b * n / k;
    const std::size_t hi = (b + 1) * n / k;
    for (std::size_t i = lo; i < hi; ++i) acc[b].add(rate_samples[i], beta);
  }
  return ec_from_batches(acc, beta);
}

}  // namespace nomaec::ec
