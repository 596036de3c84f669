#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "boostcoh/linalg.hpp"
#include "check_near.hpp"
#include "oracles.hpp"

using namespace boostcoh;

namespace {

Complex determinant(std::vector<Complex> a, std::size_t n) {
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("diagonal input is returned sorted") {
  const std::vector<Complex> a{0.3, 0.0, 0.0, 0.7};
  const auto ev = linalg::hermitian_eigenvalues(a, 2);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == 0.7);
  CHECK(ev[1] == 0.3);
}

TEST_CASE("complex 2x2 against the closed form") {
  const Complex z{0.2, -0.35};
  const std::vector<Complex> a{1.5, z, std::conj(z), -0.25};
  const auto ev = linalg::hermitian_eigenvalues(a, 2);
  const double mid = 0.625, r = std::hypot(0.875, std::abs(z));
  CHECK_NEAR(ev[0], mid + r, 1e-14);
  CHECK_NEAR(ev[1], mid - r, 1e-14);
}

TEST_CASE("X-shaped 4x4 is the union of its block spectra") {
  oracle::Draws draw(11);
  for (int t = 0; t < 50; ++t) {
    const double a = draw.uniform(0, 1), b = draw.uniform(-1, 1), d = draw.uniform(0, 1);
    const double e = draw.uniform(0, 1), f = draw.uniform(-1, 1), g = draw.uniform(0, 1);
    const std::vector<Complex> m{a, 0, 0, b,  //
                                 0, e, f, 0,  //
                                 0, f, g, 0,  //
                                 b, 0, 0, d};
    const auto [o1, o2] = oracle::eig2(a, b, d);
    const auto [i1, i2] = oracle::eig2(e, f, g);
    std::vector<double> expect{o1, o2, i1, i2};
    std::sort(expect.begin(), expect.end(), std::greater<>());
    const auto ev = linalg::hermitian_eigenvalues(m, 4);
    for (int i = 0; i < 4; ++i) CHECK_NEAR(ev[i], expect[i], 1e-13);
  }
}

TEST_CASE("random Hermitian matrices keep trace and Frobenius norm") {
  oracle::Draws draw(2024);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = t % 2 ? 4 : 6;
    std::vector<Complex> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i * n + i] = draw.uniform(-2, 2);
      for (std::size_t j = i + 1; j < n; ++j) {
        m[i * n + j] = Complex(draw.uniform(-1, 1), draw.uniform(-1, 1));
        m[j * n + i] = std::conj(m[i * n + j]);
      }
    }
    double tr = 0, fro2 = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i].real();
    for (const auto& z : m) fro2 += std::norm(z);

    const auto ev = linalg::hermitian_eigenvalues(m, n);
    double sum = 0, sq = 0;
    for (double v : ev) {
      sum += v;
      sq += v * v;
    }
    CHECK_NEAR(sum, tr, 1e-12);
    CHECK_NEAR(sq, fro2, 1e-11);
    CHECK(std::is_sorted(ev.begin(), ev.end(), std::greater<>()));

    // det(A - lambda_i I) = prod_{j != i} (lambda_j - lambda_i) * (error in lambda_i).
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Complex> shifted = m;
      for (std::size_t k = 0; k < n; ++k) shifted[k * n + k] -= ev[i];
      double gaps = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) gaps *= std::abs(ev[j] - ev[i]);
      if (gaps > 1e-6) CHECK(std::abs(determinant(shifted, n)) / gaps <= 1e-11);
    }
  }
}

TEST_CASE("size mismatch and sweep cap") {
  const std::vector<Complex> a{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(linalg::hermitian_eigenvalues(a, 2), DomainError);

  const std::vector<Complex> b{1.0, 0.5, 0.5, 1.0, 0.3, 0.2, 0.1, 0.4, 0.2};
  std::vector<Complex> h(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i * 3 + j] = i <= j ? b[i * 3 + j] : std::conj(b[j * 3 + i]);
  linalg::JacobiOptions opts;
  opts.max_sweeps = 0;
  CHECK_THROWS_AS(linalg::hermitian_eigenvalues(h, 3, opts), ConvergenceError);
}
