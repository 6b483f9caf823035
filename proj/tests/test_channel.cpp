#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nomaec/channel/channel.hpp"
#include "nomaec/channel/philox.hpp"
#include "nomaec/errors.hpp"
#include "nomaec/numerics/quadrature.hpp"

using namespace nomaec;
using namespace nomaec::channel;

namespace {

// Largest gap between the empirical CDF of `samples` and `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> samples, const Cdf& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
  }
  return d;
}

}  // namespace

TEST_SUITE("philox") {
  TEST_CASE("known-answer vectors") {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) ==
          C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32::block(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                            K{0xffffffffu, 0xffffffffu}) ==
          C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32::block(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                            K{0xa4093822u, 0x299f31d0u}) ==
          C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
  }
}

TEST_SUITE("densities") {
  TEST_CASE("normalised with the stated means") {
    const auto mass = [](auto pdf) { return numerics::integrate_semi_infinite(pdf, 0.0).value; };
    CHECK(mass([](double x) { return pdf_weak(x); }) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mass([](double x) { return pdf_strong(x); }) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mass([](double x) { return x * pdf_weak(x); }) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mass([](double x) { return x * pdf_strong(x); }) == doctest::Approx(1.5).epsilon(1e-12));
  }

  TEST_CASE("joint density marginalises to the order statistics") {
    for (double x : {0.1, 0.9, 2.5}) {
      const double weak = numerics::integrate_semi_infinite([x](double y) { return joint_pdf(x, y); }, x).value;
      CHECK(weak == doctest::Approx(pdf_weak(x)).epsilon(1e-12));
    }
    CHECK(joint_pdf(2.0, 1.0) == 0.0);
  }

  TEST_CASE("strong density is stable near zero") {
    CHECK(pdf_strong(1e-12) == doctest::Approx(2e-12).epsilon(1e-10));
    CHECK(pdf_strong(0.0) == 0.0);
  }

  TEST_CASE("negative gains are rejected") {
    CHECK_THROWS_AS(pdf_weak(-0.1), DomainError);
    CHECK_THROWS_AS(pdf_strong(-0.1), DomainError);
    CHECK_THROWS_AS(joint_pdf(-0.1, 1.0), DomainError);
  }
}

TEST_SUITE("sampling") {
  TEST_CASE("pairs are ordered and follow the order-statistic laws") {
    ChannelRng rng(42, 0);
    const int n = 200000;
    std::vector<double> weak, strong;
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto p = sample_pair(rng);
      REQUIRE(p.valid());
      REQUIRE(p.x1 <= p.x2);
      weak.push_back(p.x1);
      strong.push_back(p.x2);
      sum1 += p.x1;
      sum2 += p.x2;
    }
    CHECK(sum1 / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum2 / n == doctest::Approx(1.5).epsilon(0.01));
    // 99.9% critical value of the one-sample KS statistic is 1.95/sqrt(n).
    const double critical = 1.95 / std::sqrt(static_cast<double>(n));
    CHECK(ks_statistic(weak, [](double x) { return -std::expm1(-2.0 * x); }) < critical);
    CHECK(ks_statistic(strong, [](double x) { return std::pow(-std::expm1(-x), 2.0); }) < critical);
  }

  TEST_CASE("uniforms lie strictly inside (0,1)") {
    ChannelRng rng(7, 3);
    for (int i = 0; i < 100000; ++i) {
      double u0 = 0.0, u1 = 0.0;
      rng.next_uniform_pair(u0, u1);
      REQUIRE(u0 > 0.0);
      REQUIRE(u0 < 1.0);
      REQUIRE(u1 > 0.0);
      REQUIRE(u1 < 1.0);
    }
  }

  TEST_CASE("streams are reproducible and distinct") {
    ChannelRng a(9, 1), b(9, 1), c(9, 2), d(10, 1);
    for (int i = 0; i < 1000; ++i) {
      const auto pa = sample_pair(a);
      const auto pb = sample_pair(b);
      const auto pc = sample_pair(c);
      const auto pd = sample_pair(d);
      REQUIRE(pa.x1 == pb.x1);
      REQUIRE(pa.x2 == pb.x2);
      REQUIRE(pa.x1 != pc.x1);
      REQUIRE(pa.x1 != pd.x1);
    }
    CHECK(a.position() > 0);
    CHECK(a.seed() == 9);
    CHECK(a.stream_id() == 1);
  }
}
