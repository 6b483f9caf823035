#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nomaec/sweep/sweep.hpp"

namespace nomaec::sweep {

inline constexpr const char* kSweepHeader =
    "rho_db,beta1,beta2,p1,p2,ec1_noma,ec2_noma,ec1_oma,ec2_oma,v_n,v_o,method,samples,seed,status";

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Writes to `path`, throwing IoError when it cannot be opened.
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace nomaec::sweep
