#include "nomaec/analysis/derivative.hpp"

#include "nomaec/errors.hpp"

namespace nomaec::analysis {
namespace {

double central(const SnrFunction& f, double rho, double h) {
  return (f(rho * (1.0 + h)) - f(rho * (1.0 - h))) / (2.0 * rho * h);
}

}  // namespace

double d_ec_drho(const SnrFunction& f, double rho, double step_rel) {
  if (!(rho > 0.0)) throw DomainError("d_ec_drho: rho must be positive");
  if (!(step_rel > 0.0 && step_rel < 0.5)) throw DomainError("d_ec_drho: step must lie in (0, 0.5)");
  const double coarse = central(f, rho, step_rel);
  const double fine = central(f, rho, 0.5 * step_rel);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace nomaec::analysis
