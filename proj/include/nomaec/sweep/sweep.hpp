#pragma once

// Grid sweeps over (ρ, β1, β2, P1). Rows are produced in lexicographic grid
// order (ρ outermost, then β1, β2, P1) whatever the number of workers, and a
// Monte Carlo row draws only from Philox streams derived from its row index.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nomaec/ec/types.hpp"
#include "nomaec/numerics/quadrature.hpp"

namespace nomaec::sweep {

inline constexpr std::size_t kMinMonteCarloSamples = 1000;

struct SweepConfig {
  std::vector<double> rho_db_grid{10.0};
  std::vector<double> beta1_grid{-1.0};
  std::vector<double> beta2_grid{-1.0};
  std::vector<double> p1_grid{0.2};
  ec::EcMethod method = ec::EcMethod::quadrature;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  int mc_batches = 32;
  std::string output_path = "sweep.csv";
  numerics::QuadratureSpec quadrature;

  /// Throws DomainError naming the first violated constraint.
  void validate() const;
  std::size_t row_count() const noexcept;
};

enum class RowStatus { ok, ec2_quadrature_fallback, accuracy_failure, domain_error };

std::string_view to_string(RowStatus status) noexcept;

struct SweepRow {
  double rho_db = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double ec1_noma = 0.0;
  double ec2_noma = 0.0;
  double ec1_oma = 0.0;
  double ec2_oma = 0.0;
  double v_n = 0.0;
  double v_o = 0.0;
  ec::EcMethod method = ec::EcMethod::quadrature;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  RowStatus status = RowStatus::ok;
};

/// Evaluates grid point `index` (in row order). Failures are reported in
/// `status` with NaN values rather than thrown.
SweepRow evaluate_row(const SweepConfig& cfg, std::size_t index);

/// Reference implementation: rows one after another.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

/// Rows spread over an OpenMP team. threads <= 0 uses the OpenMP default.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int threads = 0);

}  // namespace nomaec::sweep
