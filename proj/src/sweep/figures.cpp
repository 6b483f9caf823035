#include "nomaec/sweep/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>

#include "nomaec/errors.hpp"
#include "nomaec/sweep/csv.hpp"
#include "nomaec/sweep/sweep.hpp"

namespace nomaec::sweep {
namespace {

namespace fs = std::filesystem;

const std::vector<double> kBetaFamily{-0.5, -1.0, -2.0, -4.0};
const std::vector<double> kGapBetas{-1.0, -2.0};
const std::vector<double> kSumBetas{-1.0, -2.0, -4.0};
const std::vector<double> kFig5Betas{-8.0, -6.0, -4.0, -3.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25};
const std::vector<double> kFig5Rho{1.0, 10.0, 30.0, 40.0, 50.0};

using Columns = std::function<std::string(const SweepRow&)>;

SweepConfig base_config(const FigureOptions& o) {
  SweepConfig cfg;
  cfg.rho_db_grid = arithmetic_grid(o.rho_low_db, o.rho_high_db, o.rho_step_db);
  cfg.p1_grid = {o.p1};
  cfg.method = o.method;
  cfg.mc_samples = o.mc_samples;
  cfg.seed = o.seed;
  return cfg;
}

// Sweep with β1 = β2 running over `betas`, for each ρ.
std::vector<SweepRow> tied_sweep(SweepConfig cfg, const std::vector<double>& betas, int threads) {
  std::vector<SweepRow> rows;
  for (double beta : betas) {
    cfg.beta1_grid = {beta};
    cfg.beta2_grid = {beta};
    auto part = run_sweep(cfg, threads);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string join(std::initializer_list<double> values) {
  std::string s;
  for (double v : values) {
    if (!s.empty()) s += ',';
    s += format_number(v);
  }
  return s;
}

void write(const fs::path& path, const std::string& header, const std::vector<SweepRow>& rows,
           const Columns& columns, std::vector<std::string>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << header << '\n';
  for (const auto& r : rows) out << columns(r) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
  written.push_back(path.string());
}

}  // namespace

std::vector<double> arithmetic_grid(double low, double high, double step) {
  if (!(step > 0.0) || !(high >= low) || !std::isfinite(low) || !std::isfinite(high)) {
    throw DomainError("grid needs finite low <= high and a positive step");
  }
  std::vector<double> grid;
  const auto n = static_cast<long long>(std::floor((high - low) / step + 1e-6));
  for (long long i = 0; i <= n; ++i) grid.push_back(low + static_cast<double>(i) * step);
  return grid;
}

std::vector<std::string> write_figures(const std::string& directory, const FigureOptions& o,
                                       int threads) {
  const fs::path dir(directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + directory + ": " + ec.message());

  std::vector<std::string> written;
  const SweepConfig base = base_config(o);

  const auto family = tied_sweep(base, kBetaFamily, threads);
  const auto beta_is = [](const std::vector<double>& set) {
    return [set](const SweepRow& r) {
      for (double b : set) {
        if (r.beta1 == b) return true;
      }
      return false;
    };
  };
  const auto filter = [&](const auto& keep) {
    std::vector<SweepRow> out;
    for (const auto& r : family) {
      if (keep(r)) out.push_back(r);
    }
    return out;
  };

  write(dir / "fig2.csv", "rho_db,ec1_noma,ec2_noma,ec1_oma,ec2_oma", filter(beta_is({-1.0})),
        [](const SweepRow& r) { return join({r.rho_db, r.ec1_noma, r.ec2_noma, r.ec1_oma, r.ec2_oma}); },
        written);
  write(dir / "fig3.csv", "rho_db,beta,ec1_noma,ec1_oma", family,
        [](const SweepRow& r) { return join({r.rho_db, r.beta1, r.ec1_noma, r.ec1_oma}); }, written);
  write(dir / "fig4.csv", "rho_db,beta,ec2_noma,ec2_oma", family,
        [](const SweepRow& r) { return join({r.rho_db, r.beta2, r.ec2_noma, r.ec2_oma}); }, written);

  SweepConfig fig5 = base;
  std::vector<SweepRow> fig5_rows;
  for (double rho : kFig5Rho) {
    fig5.rho_db_grid = {rho};
    auto part = tied_sweep(fig5, kFig5Betas, threads);
    fig5_rows.insert(fig5_rows.end(), part.begin(), part.end());
  }
  write(dir / "fig5.csv", "rho_db,beta,ec1_noma,ec2_noma,ec1_oma,ec2_oma", fig5_rows,
        [](const SweepRow& r) {
          return join({r.rho_db, r.beta1, r.ec1_noma, r.ec2_noma, r.ec1_oma, r.ec2_oma});
        },
        written);

  write(dir / "fig6.csv", "rho_db,beta,gap1", filter(beta_is(kGapBetas)),
        [](const SweepRow& r) { return join({r.rho_db, r.beta1, r.ec1_noma - r.ec1_oma}); }, written);
  write(dir / "fig7.csv", "rho_db,beta,gap2", filter(beta_is(kGapBetas)),
        [](const SweepRow& r) { return join({r.rho_db, r.beta2, r.ec2_noma - r.ec2_oma}); }, written);
  write(dir / "fig8.csv", "rho_db,beta,v_n,v_o", filter(beta_is(kSumBetas)),
        [](const SweepRow& r) { return join({r.rho_db, r.beta1, r.v_n, r.v_o}); }, written);

  SweepConfig weak = base;
  weak.beta1_grid = kBetaFamily;
  weak.beta2_grid = {-1.0};
  SweepConfig strong = base;
  strong.beta1_grid = {-1.0};
  strong.beta2_grid = kBetaFamily;
  const auto weak_rows = run_sweep(weak, threads);
  const auto strong_rows = run_sweep(strong, threads);
  const fs::path fig9 = dir / "fig9.csv";
  std::ofstream out(fig9, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + fig9.string() + " for writing");
  out << "family,rho_db,beta1,beta2,v_n,v_o,gap\n";
  for (const auto* set : {&weak_rows, &strong_rows}) {
    const char* name = set == &weak_rows ? "weak_varies" : "strong_varies";
    for (const auto& r : *set) {
      out << name << ',' << join({r.rho_db, r.beta1, r.beta2, r.v_n, r.v_o, r.v_n - r.v_o}) << '\n';
    }
  }
  out.flush();
  if (!out) throw IoError("failed writing " + fig9.string());
  written.push_back(fig9.string());
  return written;
}

}  // namespace nomaec::sweep
