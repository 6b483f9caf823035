#include "nomaec/sweep/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "nomaec/errors.hpp"

namespace nomaec::sweep {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  // snprintf honours LC_NUMERIC; the output always uses '.'.
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.rho_db) << ',' << format_number(r.beta1) << ','
        << format_number(r.beta2) << ',' << format_number(r.p1) << ',' << format_number(r.p2)
        << ',' << format_number(r.ec1_noma) << ',' << format_number(r.ec2_noma) << ','
        << format_number(r.ec1_oma) << ',' << format_number(r.ec2_oma) << ','
        << format_number(r.v_n) << ',' << format_number(r.v_o) << ',' << ec::to_string(r.method)
        << ',' << r.samples << ',' << r.seed << ',' << to_string(r.status) << '\n';
  }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_sweep_csv(out, rows);
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace nomaec::sweep
