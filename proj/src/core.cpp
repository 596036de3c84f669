#include "boostcoh/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "boostcoh/linalg.hpp"

namespace boostcoh {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kLogSqrtPi = 0.57236494292470008707;

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

}  // namespace

void BoostParams::validate() const {
  if (!(beta >= 0.0 && beta < 1.0)) throw InvariantError("BoostParams: beta outside [0, 1)");
  if (!(cosh_alpha >= 1.0)) throw InvariantError("BoostParams: cosh(alpha) < 1");
  const double b2 = cosh_alpha * cosh_alpha;
  if (std::abs(b2 - sinh_alpha * sinh_alpha - 1.0) > 1e-12 * b2)
    throw InvariantError("BoostParams: cosh^2 - sinh^2 != 1");
  if (std::abs(alpha - std::atanh(beta)) > 1e-12 * std::max(1.0, alpha))
    throw InvariantError("BoostParams: alpha != atanh(beta)");
  if (std::abs(sinh_alpha - beta * cosh_alpha) > 1e-12 * cosh_alpha)
    throw InvariantError("BoostParams: sinh(alpha) != beta cosh(alpha)");
}

BoostParams boost_from_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta >= 1.0) {
    std::ostringstream os;
    os << "boost parameter beta must satisfy 0 <= beta < 1 (got " << beta << ")";
    throw DomainError(os.str());
  }
  BoostParams b;
  b.beta = beta;
  b.alpha = std::atanh(beta);
  // (1 - beta)(1 + beta) keeps full precision as beta -> 1.
  b.cosh_alpha = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  b.sinh_alpha = beta * b.cosh_alpha;
  return b;
}

WavePacket::WavePacket(int n, double sigma_mev, double mass_mev)
    : n_(n), sigma_(sigma_mev), mass_(mass_mev) {
  if (n < 0) throw DomainError("wave packet exponent n must be a nonnegative integer (n > -1/2)");
  if (!(sigma_mev > 0.0) || !std::isfinite(sigma_mev))
    throw DomainError("wave packet width sigma must be positive");
  if (!(mass_mev > 0.0) || !std::isfinite(mass_mev))
    throw DomainError("particle mass must be positive");
}

GeometryConfig::GeometryConfig(const Vec3& e_hat, const Vec3& f_hat)
    : e_hat_(e_hat), f_hat_(f_hat) {
  if (std::abs(norm3(e_hat) - 1.0) > 1e-12 || std::abs(norm3(f_hat) - 1.0) > 1e-12)
    throw DomainError("GeometryConfig: e_hat and f_hat must be unit vectors");
}

GeometryConfig GeometryConfig::perpendicular() {
  return GeometryConfig({0.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi / 2.0)) {
    std::ostringstream os;
    os << "entanglement angle theta must lie in [0, pi/2] (got " << theta << ")";
    throw DomainError(os.str());
  }
}

EntangledPairConfig::EntangledPairConfig(double theta_rad) : theta(theta_rad) {
  check_theta(theta_rad);
}

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ != 2 && dim_ != 4) throw InvariantError("DensityMatrix: dimension must be 2 or 4");
  if (entries_.size() != dim_ * dim_) throw InvariantError("DensityMatrix: wrong entry count");
  for (const auto& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvariantError("DensityMatrix: non-finite entry");

  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > kHermitianTol)
        throw InvariantError("DensityMatrix: not Hermitian");

  if (std::abs(trace() - 1.0) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "DensityMatrix: trace " << trace() << " differs from 1";
    throw InvariantError(os.str());
  }

  const auto eig = linalg::hermitian_eigenvalues(entries_, dim_);
  if (eig.back() < -kPsdTol) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << eig.back();
    throw InvariantError(os.str());
  }
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i).real();
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  double p = 0.0;
  for (const auto& v : entries_) p += std::norm(v);
  return p;
}

double gamma_half_integer(int k) {
  if (k < 0) throw DomainError("gamma_half_integer: k must be nonnegative");
  double v = kSqrtPi;
  for (int j = 0; j < k; ++j) {
    v *= j + 0.5;
    if (!std::isfinite(v))
      throw OverflowError("gamma_half_integer: Gamma(" + std::to_string(k) +
                          " + 1/2) exceeds the double range");
  }
  return v;
}

double log_gamma_half_integer(int k) {
  if (k < 0) throw DomainError("log_gamma_half_integer: k must be nonnegative");
  double v = kLogSqrtPi;
  for (int j = 0; j < k; ++j) v += std::log(j + 0.5);
  return v;
}

double gamma_ratio_int_over_half(int n) {
  if (n < 0) throw DomainError("gamma_ratio_int_over_half: n must be nonnegative");
  double r = 1.0 / kSqrtPi;  // Gamma(1) / Gamma(1/2)
  for (int j = 0; j < n; ++j) r *= (j + 1.0) / (j + 0.5);
  return r;
}

double psi_amplitude(const WavePacket& pkt, double p_mev) {
  const double kappa = p_mev / pkt.sigma();
  const int n = pkt.n();
  const double log_norm = 0.5 * (std::log(pkt.sigma()) + log_gamma_half_integer(n));
  if (kappa == 0.0) return n == 0 ? std::exp(-log_norm) : 0.0;
  // p^n / sigma^(n + 1/2) = kappa^n / sqrt(sigma)
  const double log_mag = n * std::log(std::abs(kappa)) - 0.5 * kappa * kappa - log_norm;
  const double sign = (kappa < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
  return sign * std::exp(log_mag);
}

}  // namespace boostcoh
