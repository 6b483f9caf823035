#pragma once

#include <functional>

namespace nomaec::analysis {

using SnrFunction = std::function<double(double rho)>;

inline constexpr double kDefaultStepRel = 1e-4;

/// d f / d ρ by a relative central difference with step h = step_rel,
/// Richardson-extrapolated once: (4 D(h/2) - D(h)) / 3.
double d_ec_drho(const SnrFunction& f, double rho, double step_rel = kDefaultStepRel);

}  // namespace nomaec::analysis
