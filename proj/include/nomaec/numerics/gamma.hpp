#pragma once

namespace nomaec::numerics {

/// Upper incomplete gamma Γ(s, x) = ∫_x^∞ t^{s-1} e^{-t} dt for any real s
/// and x > 0, or x = 0 with s > 0. Throws DomainError otherwise.
double upper_incomplete_gamma(double s, double x);

/// ln Γ(s, x). Same domain as upper_incomplete_gamma; does not overflow for
/// large s or underflow for large x.
double log_upper_incomplete_gamma(double s, double x);

/// ln of the scaled function e^x x^{-s} Γ(s, x), x > 0. Tends to -ln x as
/// x -> ∞ and is computed without forming e^{-x}.
double log_scaled_upper_incomplete_gamma(double s, double x);

/// Tricomi U(1, b, z) = ∫_0^∞ e^{-zt} (1+t)^{b-2} dt for z > 0.
/// Evaluated as e^z z^{1-b} Γ(b-1, z).
double hyp_u_1(double b, double z);

/// ln U(1, b, z).
double log_hyp_u_1(double b, double z);

}  // namespace nomaec::numerics
