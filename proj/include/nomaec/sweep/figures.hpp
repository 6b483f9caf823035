#pragma once

// Plot-ready datasets, one CSV per figure:
//
//   fig2.csv  rho_db,ec1_noma,ec2_noma,ec1_oma,ec2_oma         (β = -1)
//   fig3.csv  rho_db,beta,ec1_noma,ec1_oma                     (β ∈ {-0.5,-1,-2,-4})
//   fig4.csv  rho_db,beta,ec2_noma,ec2_oma                     (β ∈ {-0.5,-1,-2,-4})
//   fig5.csv  rho_db,beta,ec1_noma,ec2_noma,ec1_oma,ec2_oma    (ρ ∈ {1,10,30,40,50} dB)
//   fig6.csv  rho_db,beta,gap1                                 (β ∈ {-1,-2})
//   fig7.csv  rho_db,beta,gap2                                 (β ∈ {-1,-2})
//   fig8.csv  rho_db,beta,v_n,v_o                              (β ∈ {-1,-2,-4})
//   fig9.csv  family,rho_db,beta1,beta2,v_n,v_o,gap
//
// In fig9.csv the family "weak_varies" fixes β2 = -1 and sweeps β1; the
// family "strong_varies" fixes β1 = -1 and sweeps β2. Unless stated, β1 = β2.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nomaec/ec/types.hpp"

namespace nomaec::sweep {

struct FigureOptions {
  double rho_low_db = -20.0;
  double rho_high_db = 60.0;
  double rho_step_db = 1.0;
  double p1 = 0.2;
  ec::EcMethod method = ec::EcMethod::quadrature;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
};

/// Inclusive arithmetic grid low, low+step, ..., high (within step/1e6).
std::vector<double> arithmetic_grid(double low, double high, double step);

/// Writes fig2.csv ... fig9.csv into `directory` (created if missing) and
/// returns the written paths.
std::vector<std::string> write_figures(const std::string& directory, const FigureOptions& options,
                                       int threads = 0);

}  // namespace nomaec::sweep
