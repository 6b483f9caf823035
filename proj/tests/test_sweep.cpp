#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nomaec/errors.hpp"
#include "nomaec/sweep/csv.hpp"
#include "nomaec/sweep/figures.hpp"
#include "nomaec/sweep/sweep.hpp"

using namespace nomaec;
using namespace nomaec::sweep;

namespace {

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(out, rows);
  return out.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nomaec_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("sweep config") {
  TEST_CASE("validation") {
    SweepConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    auto bad = cfg;
    bad.rho_db_grid.clear();
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = cfg;
    bad.beta1_grid = {-1.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = cfg;
    bad.p1_grid = {1.0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = cfg;
    bad.method = ec::EcMethod::monte_carlo;
    bad.mc_samples = 999;
    CHECK_THROWS_AS(bad.validate(), DomainError);
  }

  TEST_CASE("grids") {
    const auto g = arithmetic_grid(-20, 40, 2);
    CHECK(g.size() == 31);
    CHECK(g.front() == -20.0);
    CHECK(g.back() == 40.0);
    CHECK(arithmetic_grid(0, 1, 0.1).size() == 11);
    CHECK_THROWS_AS(arithmetic_grid(0, 1, 0.0), DomainError);
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("rows follow lexicographic grid order") {
    SweepConfig cfg;
    cfg.rho_db_grid = {0, 10};
    cfg.beta1_grid = {-2, -1};
    cfg.beta2_grid = {-1};
    cfg.p1_grid = {0.2, 0.4};
    const auto rows = run_sweep(cfg, 2);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].rho_db == 0);
    CHECK(rows[0].beta1 == -2);
    CHECK(rows[0].p1 == 0.2);
    CHECK(rows[1].p1 == 0.4);
    CHECK(rows[2].beta1 == -1);
    CHECK(rows[4].rho_db == 10);
    for (const auto& r : rows) {
      CHECK(r.p2 == doctest::Approx(1.0 - r.p1));
      CHECK(r.status == RowStatus::ok);
      CHECK(std::abs(r.v_n - (r.ec1_noma + r.ec2_noma)) <= 1e-12);
      CHECK(std::abs(r.v_o - (r.ec1_oma + r.ec2_oma)) <= 1e-12);
    }
  }

  TEST_CASE("strong-user EC flattens at high SNR") {
    SweepConfig cfg;
    cfg.rho_db_grid = arithmetic_grid(-20, 40, 2);
    const auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 31);
    double lo = 1e9, hi = 0.0;
    for (const auto& r : rows) {
      if (r.rho_db > 30) {
        lo = std::min(lo, r.ec2_noma);
        hi = std::max(hi, r.ec2_noma);
      }
    }
    CHECK((hi - lo) / hi < 0.01);
  }

  TEST_CASE("ECs grow as the exponent relaxes") {
    SweepConfig cfg;
    cfg.beta1_grid = {-8, -6, -4, -3, -2, -1.5, -1, -0.75, -0.5, -0.25};
    cfg.beta2_grid = {-1};
    const auto rows = run_sweep(cfg);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].ec1_noma >= rows[i - 1].ec1_noma - 1e-10);
      CHECK(rows[i].ec1_oma >= rows[i - 1].ec1_oma - 1e-10);
    }
  }

  TEST_CASE("serial and parallel sweeps produce identical CSV") {
    SweepConfig cfg;
    cfg.rho_db_grid = {-10, 5, 20};
    cfg.beta1_grid = {-1, -2};
    cfg.method = ec::EcMethod::monte_carlo;
    cfg.mc_samples = 20000;
    cfg.seed = 77;
    const auto reference = to_csv(run_sweep_serial(cfg));
    for (int threads : {1, 2, 3, 8}) CHECK(to_csv(run_sweep(cfg, threads)) == reference);
    cfg.seed = 78;
    CHECK(to_csv(run_sweep(cfg)) != reference);
  }

  TEST_CASE("failures are recorded per row") {
    SweepConfig cfg;
    cfg.rho_db_grid = {-90, 10};
    cfg.beta2_grid = {-1.5};
    cfg.method = ec::EcMethod::closed_form;
    const auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == RowStatus::accuracy_failure);
    CHECK(std::isnan(rows[0].ec1_noma));
    CHECK(rows[1].status == RowStatus::ec2_quadrature_fallback);
    CHECK(std::isfinite(rows[1].ec2_noma));
  }
}

TEST_SUITE("csv") {
  TEST_CASE("header and formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-2.5e-7) == "-2.5e-07");
    CHECK(format_number(std::nan("")) == "nan");
    SweepRow r;
    r.rho_db = 10;
    r.beta1 = -1;
    r.beta2 = -1;
    r.p1 = 0.2;
    r.p2 = 0.8;
    r.seed = 3;
    const auto text = to_csv({r});
    CHECK(text.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
    CHECK(text.find("\n10,-1,-1,0.2,0.8,0,0,0,0,0,0,quadrature,0,3,ok\n") != std::string::npos);
  }

  TEST_CASE("unwritable path") {
    CHECK_THROWS_AS(write_sweep_csv("/nonexistent-dir/out.csv", {}), IoError);
  }
}

TEST_SUITE("figures") {
  TEST_CASE("datasets and schemas") {
    const auto dir = scratch_dir("figures");
    FigureOptions o;
    o.rho_low_db = -20;
    o.rho_high_db = 60;
    o.rho_step_db = 5;
    const auto files = write_figures(dir.string(), o);
    CHECK(files.size() == 8);

    const auto fig2 = read_lines(dir / "fig2.csv");
    CHECK(fig2[0] == "rho_db,ec1_noma,ec2_noma,ec1_oma,ec2_oma");
    CHECK(fig2.size() == 18);
    CHECK(read_lines(dir / "fig3.csv")[0] == "rho_db,beta,ec1_noma,ec1_oma");
    CHECK(read_lines(dir / "fig4.csv")[0] == "rho_db,beta,ec2_noma,ec2_oma");
    const auto fig5 = read_lines(dir / "fig5.csv");
    CHECK(fig5[0] == "rho_db,beta,ec1_noma,ec2_noma,ec1_oma,ec2_oma");
    CHECK(fig5.size() == 51);
    CHECK(read_lines(dir / "fig8.csv")[0] == "rho_db,beta,v_n,v_o");
    const auto fig9 = read_lines(dir / "fig9.csv");
    CHECK(fig9[0] == "family,rho_db,beta1,beta2,v_n,v_o,gap");
    CHECK(fig9.size() == 1 + 2 * 4 * 17);

    // fig6: the weak-user gap starts near zero, dips negative, ends positive.
    const auto fig6 = read_lines(dir / "fig6.csv");
    CHECK(fig6[0] == "rho_db,beta,gap1");
    std::vector<double> gap;
    for (std::size_t i = 1; i < fig6.size(); ++i) {
      if (fig6[i].find(",-1,") == std::string::npos) continue;
      gap.push_back(std::stod(fig6[i].substr(fig6[i].rfind(',') + 1)));
    }
    REQUIRE(gap.size() == 17);
    CHECK(std::abs(gap.front()) < 0.01);
    CHECK(*std::min_element(gap.begin(), gap.end()) < -0.05);
    CHECK(gap.back() > 0.0);

    // fig7: the strong-user gap rises to a maximum, then falls below zero.
    const auto fig7 = read_lines(dir / "fig7.csv");
    std::vector<double> gap2;
    for (std::size_t i = 1; i < fig7.size(); ++i) {
      if (fig7[i].find(",-1,") == std::string::npos) continue;
      gap2.push_back(std::stod(fig7[i].substr(fig7[i].rfind(',') + 1)));
    }
    const auto peak = std::max_element(gap2.begin(), gap2.end());
    CHECK(peak != gap2.begin());
    CHECK(peak != gap2.end() - 1);
    CHECK(gap2.back() < 0.0);
  }
}
