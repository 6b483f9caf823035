#include "nomaec/ec/monte_carlo.hpp"

#include <omp.h>

#include "nomaec/channel/channel.hpp"
#include "nomaec/ec/rates.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::ec {
namespace {

struct BatchSlot {
  MomentBatch ec1_noma, ec2_noma, ec1_oma, ec2_oma;
};

BatchSlot run_batch(const Snr& snr, const PowerAllocation& pa, double beta1, double beta2,
                    const McConfig& cfg, int batch) {
  channel::ChannelRng rng(cfg.seed, cfg.stream_base + static_cast<std::uint64_t>(batch));
  BatchSlot slot;
  const std::size_t n = cfg.batch_size(batch);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pair = channel::sample_pair(rng);
    slot.ec1_noma.add(rate_noma(snr, pa, pair, User::weak), beta1);
    slot.ec2_noma.add(rate_noma(snr, pa, pair, User::strong), beta2);
    slot.ec1_oma.add(rate_oma(snr, pair, User::weak), beta1);
    slot.ec2_oma.add(rate_oma(snr, pair, User::strong), beta2);
  }
  return slot;
}

McBatches gather(const std::vector<BatchSlot>& slots) {
  McBatches out;
  for (auto& v : out.per_quantity) v.reserve(slots.size());
  for (const auto& s : slots) {
    out.per_quantity[kEc1Noma].push_back(s.ec1_noma);
    out.per_quantity[kEc2Noma].push_back(s.ec2_noma);
    out.per_quantity[kEc1Oma].push_back(s.ec1_oma);
    out.per_quantity[kEc2Oma].push_back(s.ec2_oma);
  }
  return out;
}

}  // namespace

void McConfig::validate() const {
  if (batches < 1) throw DomainError("Monte Carlo needs at least one batch");
  if (samples < static_cast<std::size_t>(batches)) {
    throw DomainError("Monte Carlo sample count must be at least the batch count");
  }
}

std::size_t McConfig::batch_size(int batch) const noexcept {
  const auto k = static_cast<std::size_t>(batches);
  const auto b = static_cast<std::size_t>(batch);
  return samples / k + (b < samples % k ? 1 : 0);
}

McBatches mc_kernel_serial(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                           const QosExponent& qos2, const McConfig& cfg) {
  cfg.validate();
  std::vector<BatchSlot> slots(static_cast<std::size_t>(cfg.batches));
  for (int b = 0; b < cfg.batches; ++b) {
    slots[static_cast<std::size_t>(b)] = run_batch(snr, pa, qos1.beta(), qos2.beta(), cfg, b);
  }
  return gather(slots);
}

McBatches mc_kernel_parallel(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                             const QosExponent& qos2, const McConfig& cfg, int threads) {
  cfg.validate();
  std::vector<BatchSlot> slots(static_cast<std::size_t>(cfg.batches));
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const double beta1 = qos1.beta();
  const double beta2 = qos2.beta();
#pragma omp parallel for schedule(static) num_threads(team)
  for (int b = 0; b < cfg.batches; ++b) {
    slots[static_cast<std::size_t>(b)] = run_batch(snr, pa, beta1, beta2, cfg, b);
  }
  return gather(slots);
}

McPointResult mc_estimates(const McBatches& batches, const QosExponent& qos1,
                           const QosExponent& qos2) {
  return {ec_from_batches(batches.per_quantity[kEc1Noma], qos1.beta()),
          ec_from_batches(batches.per_quantity[kEc2Noma], qos2.beta()),
          ec_from_batches(batches.per_quantity[kEc1Oma], qos1.beta()),
          ec_from_batches(batches.per_quantity[kEc2Oma], qos2.beta())};
}

McPointResult mc_point(const Snr& snr, const PowerAllocation& pa, const QosExponent& qos1,
                       const QosExponent& qos2, const McConfig& cfg, int threads) {
  return mc_estimates(mc_kernel_parallel(snr, pa, qos1, qos2, cfg, threads), qos1, qos2);
}

}  // namespace nomaec::ec
