#include <doctest.h>

#include <cmath>
#include <limits>

#include "boostcoh/core.hpp"
#include "check_near.hpp"
#include "oracles.hpp"

using namespace boostcoh;

TEST_CASE("boost_from_beta") {
  const auto b = boost_from_beta(0.95);
  CHECK_NEAR(b.cosh_alpha, 3.2025630761017427, 1e-14);
  CHECK_NEAR(b.sinh_alpha, 3.0424349222966555, 1e-14);
  CHECK_NEAR(b.alpha, std::atanh(0.95), 1e-15);
  CHECK_NEAR(boost_from_beta(0.3).cosh_alpha, 1.0482848367219183, 1e-15);

  const auto rest = boost_from_beta(0.0);
  CHECK(rest.alpha == 0.0);
  CHECK(rest.sinh_alpha == 0.0);
  CHECK(rest.cosh_alpha == 1.0);

  CHECK_THROWS_AS(boost_from_beta(1.0), DomainError);
  CHECK_THROWS_AS(boost_from_beta(-0.1), DomainError);
  CHECK_THROWS_AS(boost_from_beta(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("boost near the speed of light stays consistent") {
  const auto b = boost_from_beta(1.0 - 1e-12);
  CHECK_NOTHROW(b.validate());
  CHECK(b.cosh_alpha > 7e5);
}

TEST_CASE("BoostParams::validate rejects inconsistent fields") {
  BoostParams b = boost_from_beta(0.5);
  b.sinh_alpha *= 1.01;
  CHECK_THROWS_AS(b.validate(), InvariantError);
}

TEST_CASE("WavePacket domain") {
  const WavePacket pkt(2, 100.0, 939.36);
  CHECK_NEAR(pkt.sigma_over_mass(), 100.0 / 939.36, 1e-16);
  CHECK(pkt.perturbative());
  CHECK_FALSE(WavePacket(0, 2000.0, 939.36).perturbative());
  CHECK_THROWS_AS(WavePacket(-1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(WavePacket(0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(WavePacket(0, 1.0, -1.0), DomainError);
}

TEST_CASE("GeometryConfig requires unit vectors") {
  const auto g = GeometryConfig::perpendicular();
  CHECK(g.e_hat()[2] == 1.0);
  CHECK(g.f_hat()[0] == 1.0);
  CHECK_THROWS_AS(GeometryConfig({0, 0, 2}, {1, 0, 0}), DomainError);
}

TEST_CASE("theta range") {
  CHECK_NOTHROW(check_theta(0.0));
  CHECK_NOTHROW(check_theta(kPi / 2));
  CHECK_THROWS_AS(check_theta(-1e-3), DomainError);
  CHECK_THROWS_AS(check_theta(kPi / 2 + 1e-6), DomainError);
  CHECK_THROWS_AS(EntangledPairConfig(2.0), DomainError);
  CHECK(EntangledPairConfig(0.3).theta == 0.3);
}

TEST_CASE("DensityMatrix invariants") {
  CHECK_NOTHROW(DensityMatrix(2, {0.7, 0.0, 0.0, 0.3}));
  CHECK_THROWS_AS(DensityMatrix(2, {0.7, 0.0, 0.0, 0.4}), InvariantError);
  CHECK_THROWS_AS(DensityMatrix(2, {0.5, 0.1, 0.2, 0.5}), InvariantError);
  CHECK_THROWS_AS(DensityMatrix(2, {1.2, 0.0, 0.0, -0.2}), InvariantError);
  CHECK_THROWS_AS(DensityMatrix(3, std::vector<Complex>(9, 1.0 / 3)), InvariantError);
  CHECK_THROWS_AS(DensityMatrix(2, {1.0, 0.0, 0.0}), InvariantError);

  const Complex i{0.0, 1.0};
  const DensityMatrix pure(2, {0.5, -0.5 * i, 0.5 * i, 0.5});
  CHECK_NEAR(pure.trace(), 1.0, 1e-15);
  CHECK_NEAR(pure.purity(), 1.0, 1e-15);
  CHECK_NEAR(DensityMatrix(2, {0.5, 0.0, 0.0, 0.5}).purity(), 0.5, 1e-15);
}

TEST_CASE("gamma at half integers") {
  CHECK_NEAR(gamma_half_integer(0), 1.7724538509055159, 1e-15);
  CHECK_NEAR(gamma_half_integer(2), 1.3293403881791370, 1e-15);
  CHECK_NEAR(gamma_half_integer(5) / 52.342777784553520, 1.0, 1e-15);
  for (int k = 0; k < 60; ++k) {
    CHECK_NEAR(gamma_half_integer(k) / std::tgamma(k + 0.5), 1.0, 1e-13);
    CHECK_NEAR(log_gamma_half_integer(k), std::lgamma(k + 0.5), 1e-12 * (1 + k));
    CHECK_NEAR(gamma_ratio_int_over_half(k) / std::exp(std::lgamma(k + 1.0) - std::lgamma(k + 0.5)),
               1.0, 1e-12);
  }
  CHECK_THROWS_AS(gamma_half_integer(200), OverflowError);
  CHECK(std::isfinite(log_gamma_half_integer(100000)));
  CHECK(std::isfinite(gamma_ratio_int_over_half(100000)));
}

TEST_CASE("psi amplitude is normalized") {
  CHECK_NEAR(psi_amplitude(WavePacket(0, 1.0, 10.0), 0.0), 0.7511255444649425, 1e-15);
  CHECK_NEAR(psi_amplitude(WavePacket(2, 2.0, 10.0), 2.0), 0.37198006103400879, 1e-15);

  for (int n : {0, 1, 3, 6}) {
    const WavePacket pkt(n, 50.0, 939.36);
    const int steps = 40000;
    const double lo = -15 * pkt.sigma(), h = 30 * pkt.sigma() / steps;
    double sum = 0;
    for (int i = 0; i <= steps; ++i) {
      const double v = psi_amplitude(pkt, lo + h * i);
      sum += (i == 0 || i == steps ? 0.5 : 1.0) * v * v;
    }
    CHECK_NEAR(sum * h, 1.0, 1e-10);
  }
  CHECK(std::isfinite(psi_amplitude(WavePacket(400, 1.0, 10.0), 20.0)));
}
