#include "nomaec/sweep/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

#include "nomaec/ec/monte_carlo.hpp"
#include "nomaec/ec/point.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::sweep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

void fill_values(SweepRow& row, const ec::EcPoint& p) {
  row.ec1_noma = p.ec1_noma.value;
  row.ec2_noma = p.ec2_noma.value;
  row.ec1_oma = p.ec1_oma.value;
  row.ec2_oma = p.ec2_oma.value;
  row.v_n = row.ec1_noma + row.ec2_noma;
  row.v_o = row.ec1_oma + row.ec2_oma;
}

void fill_nan(SweepRow& row) {
  row.ec1_noma = row.ec2_noma = row.ec1_oma = row.ec2_oma = row.v_n = row.v_o = kNaN;
}

}  // namespace

void SweepConfig::validate() const {
  require(!rho_db_grid.empty(), "sweep: rho grid is empty");
  require(!beta1_grid.empty(), "sweep: beta1 grid is empty");
  require(!beta2_grid.empty(), "sweep: beta2 grid is empty");
  require(!p1_grid.empty(), "sweep: p1 grid is empty");
  for (double v : rho_db_grid) require(std::isfinite(v), "sweep: rho values must be finite");
  for (double v : beta1_grid) require(v < 0.0, "sweep: beta1 values must be negative");
  for (double v : beta2_grid) require(v < 0.0, "sweep: beta2 values must be negative");
  for (double v : p1_grid) require(v > 0.0 && v < 1.0, "sweep: p1 values must lie in (0, 1)");
  if (method == ec::EcMethod::monte_carlo) {
    require(mc_samples >= kMinMonteCarloSamples, "sweep: Monte Carlo needs at least 1000 samples");
    require(mc_batches >= 1, "sweep: Monte Carlo needs at least one batch");
  }
  quadrature.validate();
}

std::size_t SweepConfig::row_count() const noexcept {
  return rho_db_grid.size() * beta1_grid.size() * beta2_grid.size() * p1_grid.size();
}

std::string_view to_string(RowStatus status) noexcept {
  switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::ec2_quadrature_fallback: return "ec2_quadrature_fallback";
    case RowStatus::accuracy_failure: return "accuracy_failure";
    case RowStatus::domain_error: return "domain_error";
  }
  return "unknown";
}

SweepRow evaluate_row(const SweepConfig& cfg, std::size_t index) {
  const std::size_t n_p = cfg.p1_grid.size();
  const std::size_t n_b2 = cfg.beta2_grid.size();
  const std::size_t n_b1 = cfg.beta1_grid.size();
  SweepRow row;
  row.p1 = cfg.p1_grid[index % n_p];
  row.beta2 = cfg.beta2_grid[(index / n_p) % n_b2];
  row.beta1 = cfg.beta1_grid[(index / (n_p * n_b2)) % n_b1];
  row.rho_db = cfg.rho_db_grid[index / (n_p * n_b2 * n_b1)];
  row.p2 = 1.0 - row.p1;
  row.method = cfg.method;
  row.seed = cfg.seed;
  row.samples = cfg.method == ec::EcMethod::monte_carlo ? cfg.mc_samples : 0;

  try {
    const auto snr = ec::Snr::from_db(row.rho_db);
    const auto pa = ec::PowerAllocation::from_weak(row.p1);
    const auto q1 = ec::QosExponent::from_beta(row.beta1);
    const auto q2 = ec::QosExponent::from_beta(row.beta2);
    ec::EcPoint point;
    if (cfg.method == ec::EcMethod::monte_carlo) {
      ec::McConfig mc;
      mc.samples = cfg.mc_samples;
      mc.seed = cfg.seed;
      mc.batches = cfg.mc_batches;
      mc.stream_base = static_cast<std::uint64_t>(index) * static_cast<std::uint64_t>(cfg.mc_batches);
      const auto r = ec::mc_estimates(ec::mc_kernel_serial(snr, pa, q1, q2, mc), q1, q2);
      point.ec1_noma = r.ec1_noma;
      point.ec2_noma = r.ec2_noma;
      point.ec1_oma = r.ec1_oma;
      point.ec2_oma = r.ec2_oma;
    } else {
      ec::EvalOptions options;
      options.method = cfg.method;
      options.quadrature = cfg.quadrature;
      point = ec::evaluate_point(snr, pa, q1, q2, options);
    }
    fill_values(row, point);
    if (!point.ec2_noma.note.empty()) row.status = RowStatus::ec2_quadrature_fallback;
  } catch (const AccuracyError&) {
    fill_nan(row);
    row.status = RowStatus::accuracy_failure;
  } catch (const DomainError&) {
    fill_nan(row);
    row.status = RowStatus::domain_error;
  }
  return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows(cfg.row_count());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = evaluate_row(cfg, i);
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int threads) {
  cfg.validate();
  std::vector<SweepRow> rows(cfg.row_count());
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (long long i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = evaluate_row(cfg, static_cast<std::size_t>(i));
  }
  return rows;
}

}  // namespace nomaec::sweep
