#pragma once

// Monte Carlo EC estimation over Rayleigh block fading.
//
// One channel draw feeds all four service rates (NOMA and OMA, both users).
// Samples are split into a fixed number of batches; batch b draws from the
// Philox stream stream_base + b, so the result depends only on the
// configuration and never on how many workers ran the batches.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nomaec/ec/estimate.hpp"
#include "nomaec/ec/types.hpp"

namespace nomaec::ec {

struct McConfig {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int batches = 32;
  std::uint64_t stream_base = 0;

  void validate() const;
  std::size_t batch_size(int batch) const noexcept;
};

/// Index of each service process in the accumulator arrays.
enum Quantity : std::size_t { kEc1Noma = 0, kEc2Noma = 1, kEc1Oma = 2, kEc2Oma = 3, kQuantityCount = 4 };

struct McBatches {
  std::array<std::vector<MomentBatch>, kQuantityCount> per_quantity;
};

struct McPointResult {
  EcEstimate ec1_noma;
  EcEstimate ec2_noma;
  EcEstimate ec1_oma;
  EcEstimate ec2_oma;
};

/// Reference implementation: batches run one after another.
McBatches mc_kernel_serial(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                           const QosExponent& qos2, const McConfig& cfg);

/// OpenMP over batches. threads <= 0 uses the OpenMP default team size.
McBatches mc_kernel_parallel(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                             const QosExponent& qos2, const McConfig& cfg, int threads = 0);

McPointResult mc_estimates(const McBatches& batches, const QosExponent& qos1,
                           const QosExponent& qos2);

McPointResult mc_point(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                       const QosExponent& qos2, const McConfig& cfg, int threads = 0);

}  // namespace nomaec::ec
