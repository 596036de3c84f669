#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "boostcoh/coherence.hpp"
#include "boostcoh/density.hpp"
#include "check_near.hpp"
#include "oracles.hpp"

using namespace boostcoh;
using namespace boostcoh::coherence;
using integrals::PerturbativeFactor;

TEST_CASE("Spectrum invariants") {
  const auto s = Spectrum::make({0.1, 0.6, 0.3});
  CHECK(s[0] == 0.6);
  CHECK(s[2] == 0.1);
  CHECK_THROWS_AS(Spectrum::make({0.5, 0.6}), InvariantError);
  CHECK_THROWS_AS(Spectrum::make({1.2, -0.2}), InvariantError);
  CHECK_THROWS_AS(Spectrum::make({}), InvariantError);
}

TEST_CASE("l1 coherence") {
  CHECK(c_l1(DensityMatrix(2, {0.3, 0.0, 0.0, 0.7})) == 0.0);
  const Complex i{0, 1};
  CHECK_NEAR(c_l1(DensityMatrix(2, {0.5, 0.3 * i, -0.3 * i, 0.5})), 0.6, 1e-15);
  CHECK_NEAR(c_l1(density::rho_dual_boost_perturbative(kPi / 6, {0.002}, {0.004})),
             std::sin(kPi / 3), 1e-12);
  oracle::Draws draw(41);
  for (int k = 0; k < 100; ++k) {
    const double th = draw.uniform(0, kPi / 2), f = draw.uniform(0, 0.49);
    CHECK_NEAR(c_l1(density::rho_single_boost_perturbative(th, {f})), std::sin(2 * th), 1e-12);
  }
}

TEST_CASE("Frobenius coherence") {
  CHECK_NEAR(c_frobenius(Spectrum::make({1, 0, 0, 0})), 1.0, 1e-15);
  CHECK_NEAR(c_frobenius(Spectrum::make({0.25, 0.25, 0.25, 0.25})), 0.0, 1e-15);
  CHECK_NEAR(c_frobenius(Spectrum::make({0.5, 0.5})), 0.0, 1e-15);
  const double f = 0.00327564;
  CHECK_NEAR(c_frobenius(Spectrum::make({f, 1 - f, 0, 0})), 0.99563726971544491, 1e-15);
  CHECK_NEAR(c_frobenius(Spectrum::make({f, 1 - f, 0, 0})),
             std::sqrt(8.0 / 3 * f * f - 8.0 / 3 * f + 1), 1e-15);
  CHECK_THROWS_AS(c_frobenius(Spectrum::make({1, 0, 0}), 4), DomainError);
  CHECK_THROWS_AS(c_frobenius(Spectrum::make({1})), DomainError);
}

TEST_CASE("analytic single-boost spectrum") {
  const auto z = spectrum_single_boost(0.7, {0.0});
  CHECK(z[0] == 1.0);
  CHECK(z[1] == 0.0);
  const auto s = spectrum_single_boost(0.2, {0.1});
  CHECK_NEAR(s[0], 0.9, 1e-15);
  CHECK_NEAR(s[1], 0.1, 1e-15);
  CHECK_THROWS_AS(spectrum_single_boost(0.2, {0.6}), DomainError);

  const auto e = hermitian_eigenvalues(density::rho_single_boost_perturbative(kPi / 3, {0.05}));
  CHECK_NEAR(e[0], 0.95, 1e-12);
  CHECK_NEAR(e[1], 0.05, 1e-12);
  CHECK_NEAR(e[2], 0.0, 1e-12);
  CHECK_NEAR(e[3], 0.0, 1e-12);

  oracle::Draws draw(43);
  for (int k = 0; k < 20; ++k) {
    const double th = draw.uniform(0, kPi / 2), f = draw.uniform(0, 0.49);
    const auto a = spectrum_single_boost(th, {f});
    const auto b = hermitian_eigenvalues(density::rho_single_boost_perturbative(th, {f}));
    for (int i = 0; i < 4; ++i) CHECK_NEAR(a[i], b[i], 1e-12);
  }
}

TEST_CASE("analytic dual-boost spectrum") {
  const auto z = spectrum_dual_boost(0.3, {0.0}, {0.0});
  CHECK(z[0] == 1.0);
  const double f = 0.01;
  const auto q = spectrum_dual_boost(kPi / 4, {f}, {f});
  CHECK_NEAR(q[0], 1 - 2 * f, 1e-15);
  CHECK_NEAR(q[1], 2 * f, 1e-15);
  CHECK_NEAR(q[2], 0.0, 1e-15);
  const auto t0 = spectrum_dual_boost(0.0, {0.002}, {0.004});
  CHECK_NEAR(t0[1], 0.004, 1e-15);
  CHECK_NEAR(t0[2], 0.002, 1e-15);
  CHECK_THROWS_AS(spectrum_dual_boost(0.0, {0.3}, {0.3}), DomainError);

  oracle::Draws draw(47);
  for (int k = 0; k < 100; ++k) {
    const double th = draw.uniform(0, kPi / 2);
    const double f1 = draw.uniform(0, 0.25), f2 = draw.uniform(0, 0.24);
    const auto a = spectrum_dual_boost(th, {f1}, {f2});
    const auto b = hermitian_eigenvalues(density::rho_dual_boost_perturbative(th, {f1}, {f2}));
    for (int i = 0; i < 4; ++i) CHECK_NEAR(a[i], b[i], 1e-11);
    CHECK(c_frobenius(a) == c_frobenius(spectrum_dual_boost(th, {f2}, {f1})));
  }
}

TEST_CASE("dual-boost C_F is theta independent to first order") {
  for (double total : {0.001, 0.004, 0.01}) {
    for (double share : {0.1, 0.5, 0.8}) {
      const PerturbativeFactor f1{total * share}, f2{total * (1 - share)};
      double lo = 2, hi = -1;
      for (int k = 0; k <= 48; ++k) {
        const double c = c_frobenius(spectrum_dual_boost(kPi / 2 * k / 48, f1, f2));
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      CHECK(hi - lo <= 5 * total * total);
    }
  }
}

TEST_CASE("closed-form C_F") {
  const std::array<BoostParams, 1> rest{boost_from_beta(0.0)};
  CHECK(c_frobenius_perturbative(3, rest, 0.1) == 1.0);

  const std::array<BoostParams, 1> b{boost_from_beta(0.95)};
  CHECK_NEAR(c_frobenius_perturbative(2, b, 100.0 / 939.36), 0.99505041551323788, 1e-15);

  const double som = 0.05;
  const std::array<BoostParams, 1> fast{boost_from_beta(1.0 - 1e-12)};
  CHECK_NEAR(c_frobenius_perturbative(1, fast, som), 1 - 3.0 / 6 * som * som, 1e-6);
  const std::array<BoostParams, 2> fast2{fast[0], fast[0]};
  CHECK_NEAR(c_frobenius_perturbative(1, fast2, som), 1 - 3.0 / 3 * som * som, 1e-6);

  CHECK_THROWS_AS(c_frobenius_perturbative(300, b, 0.1), DomainError);
  const std::array<BoostParams, 2> two{b[0], b[0]};
  CHECK_NOTHROW(c_frobenius_perturbative(149, two, 0.1));
  CHECK_THROWS_AS(c_frobenius_perturbative(150, two, 0.1), DomainError);
  CHECK_THROWS_AS(c_frobenius_perturbative(-1, b, 0.1), DomainError);
  CHECK_THROWS_AS(c_frobenius_perturbative(1, std::span<const BoostParams>{}, 0.1), DomainError);

  // Strictly decreasing in beta, sigma and n.
  double prev = 2;
  for (double beta : {0.1, 0.4, 0.7, 0.95}) {
    const std::array<BoostParams, 1> x{boost_from_beta(beta)};
    const double c = c_frobenius_perturbative(2, x, 0.1);
    CHECK(c < prev);
    prev = c;
  }
  prev = 2;
  for (double s : {0.01, 0.05, 0.1, 0.3}) {
    const double c = c_frobenius_perturbative(2, b, s);
    CHECK(c < prev);
    prev = c;
  }
  prev = 2;
  for (int n = 0; n < 8; ++n) {
    const double c = c_frobenius_perturbative(n, b, 0.1);
    CHECK(c < prev);
    prev = c;
  }
}

TEST_CASE("closed form tracks the exact spectrum to second order") {
  for (double f : {1e-4, 1e-3, 0.01, 0.05, 0.1}) {
    const double exact = c_frobenius(spectrum_single_boost(0.4, {f}));
    CHECK(std::abs(exact - (1 - 4.0 / 3 * f)) <= 3 * f * f);
  }
}

TEST_CASE("reports") {
  const std::array<BoostParams, 1> b{boost_from_beta(0.95)};
  const auto r = report_perturbative(kPi / 4, 2, b, 100.0 / 939.36);
  CHECK(r.method == CoherenceMethod::perturbative);
  CHECK(r.dim == 4);
  CHECK_NEAR(r.c_l1, 1.0, 1e-12);
  CHECK_NEAR(r.c_frobenius, 0.99505041551323788, 1e-15);
  CHECK_NEAR(r.spectrum[1], 0.0037121883650715873, 1e-16);

  const std::array<BoostParams, 2> two{boost_from_beta(0.95), boost_from_beta(0.3)};
  const auto d = report_perturbative(kPi / 6, 2, two, 0.1);
  CHECK_NEAR(d.c_l1, std::sin(kPi / 3), 1e-12);
  CHECK(d.spectrum.size() == 4);

  const auto e = report_eigensolver(density::rho_single_boost_perturbative(0.5, {0.02}));
  CHECK(e.method == CoherenceMethod::eigensolver);
  CHECK_NEAR(e.c_frobenius, c_frobenius(spectrum_single_boost(0.5, {0.02})), 1e-13);
  CHECK_NEAR(e.c_l1, std::sin(1.0), 1e-12);

  const auto two_by_two = report_eigensolver(DensityMatrix(2, {0.6, 0.2, 0.2, 0.4}));
  CHECK(two_by_two.dim == 2);
  const auto [l0, l1] = oracle::eig2(0.6, 0.2, 0.4);
  CHECK_NEAR(two_by_two.spectrum[0], l0, 1e-14);
  CHECK_NEAR(two_by_two.c_frobenius, std::sqrt(2 * ((l0 - 0.5) * (l0 - 0.5) + (l1 - 0.5) * (l1 - 0.5))), 1e-14);
}
