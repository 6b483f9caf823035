#include "nomaec/analysis/crossover.hpp"

#include <cmath>

#include "nomaec/ec/quadrature_oracle.hpp"
#include "nomaec/errors.hpp"

namespace nomaec::analysis {

using ec::Snr;
using ec::User;

std::string_view to_string(CrossoverTarget target) noexcept {
  switch (target) {
    case CrossoverTarget::weak: return "1";
    case CrossoverTarget::strong: return "2";
    case CrossoverTarget::sum: return "sum";
  }
  return "?";
}

double ec_gap(CrossoverTarget target, const Snr& snr, const ec::PowerAllocation& pa,
              const ec::QosExponent& qos1, const ec::QosExponent& qos2,
              const numerics::QuadratureSpec& spec) {
  const auto weak = [&] {
    return ec::ec1_noma_quadrature(snr, pa, qos1, spec).value -
           ec::ec_oma_quadrature(snr, qos1, User::weak, spec).value;
  };
  const auto strong = [&] {
    return ec::ec2_noma_quadrature(snr, pa, qos2, spec).value -
           ec::ec_oma_quadrature(snr, qos2, User::strong, spec).value;
  };
  switch (target) {
    case CrossoverTarget::weak: return weak();
    case CrossoverTarget::strong: return strong();
    case CrossoverTarget::sum: return weak() + strong();
  }
  return 0.0;
}

CrossoverResult find_crossover(CrossoverTarget target, const ec::PowerAllocation& pa,
                               const ec::QosExponent& qos1, const ec::QosExponent& qos2,
                               const CrossoverSettings& s) {
  if (!(s.low_db < s.high_db)) throw DomainError("find_crossover: bracket must satisfy low < high");
  if (!(s.root_tolerance_db > 0.0)) throw DomainError("find_crossover: root tolerance must be positive");
  const auto gap = [&](double db) {
    return ec_gap(target, Snr::from_db(db), pa, qos1, qos2, s.quadrature);
  };

  CrossoverResult r;
  r.target = target;
  r.low_db = s.low_db;
  r.high_db = s.high_db;
  r.gap_at_low = gap(s.low_db);
  r.gap_at_high = gap(s.high_db);
  if (std::signbit(r.gap_at_low) == std::signbit(r.gap_at_high) && r.gap_at_low != 0.0 &&
      r.gap_at_high != 0.0) {
    return r;
  }

  double lo = s.low_db, hi = s.high_db;
  double g_lo = r.gap_at_low;
  while (hi - lo > s.root_tolerance_db) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gap(mid);
    ++r.iterations;
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  r.found = true;
  r.rho_star_db = 0.5 * (lo + hi);
  r.achieved_gap = gap(r.rho_star_db);
  return r;
}

SchemeChoice select_scheme(User user, const Snr& snr, const ec::PowerAllocation& pa,
                           const ec::QosExponent& qos1, const ec::QosExponent& qos2,
                           const numerics::QuadratureSpec& spec) {
  const auto target = user == User::weak ? CrossoverTarget::weak : CrossoverTarget::strong;
  SchemeChoice c;
  c.gap = ec_gap(target, snr, pa, qos1, qos2, spec);
  c.scheme = c.gap >= 0.0 ? ec::Scheme::noma : ec::Scheme::oma;
  return c;
}

}  // namespace nomaec::analysis
