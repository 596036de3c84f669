#pragma once

// Shared domain types: boosts, wave packets, geometry and density matrices.
//
// Units are natural (c = 1). Momenta, masses and wave-packet widths are in
// MeV; every other quantity is dimensionless.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "boostcoh/errors.hpp"

namespace boostcoh {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double kPi = 3.14159265358979323846;

/// Which particles of the entangled pair are seen from a boosted frame.
enum class Scenario { single_boost, dual_boost };

/// Rapidity data of one boosted frame. Build with boost_from_beta().
struct BoostParams {
  double beta = 0.0;        ///< v/c
  double alpha = 0.0;       ///< rapidity, atanh(beta)
  double sinh_alpha = 0.0;  ///< a
  double cosh_alpha = 1.0;  ///< b = gamma

  /// Throws InvariantError if the four fields are mutually inconsistent.
  void validate() const;
};

/// Throws DomainError unless 0 <= beta < 1.
BoostParams boost_from_beta(double beta);

/// Generalized Gaussian momentum profile psi(p) ~ p^n exp(-p^2 / 2 sigma^2).
class WavePacket {
 public:
  /// Throws DomainError for n < 0, sigma <= 0 or mass <= 0.
  WavePacket(int n, double sigma_mev, double mass_mev);

  int n() const { return n_; }
  double sigma() const { return sigma_; }
  double mass() const { return mass_; }
  double sigma_over_mass() const { return sigma_ / mass_; }

  /// True when sigma/m < 1, the regime of the O((sigma/m)^2) expansions.
  bool perturbative() const { return sigma_over_mass() < 1.0; }

 private:
  int n_;
  double sigma_;
  double mass_;
};

/// Boost direction e_hat and particle momentum direction f_hat.
class GeometryConfig {
 public:
  /// Both vectors must be unit length within 1e-12.
  GeometryConfig(const Vec3& e_hat, const Vec3& f_hat);

  /// e_hat = z, f_hat = x: the layout used by the density-matrix pipeline.
  static GeometryConfig perpendicular();

  const Vec3& e_hat() const { return e_hat_; }
  const Vec3& f_hat() const { return f_hat_; }

 private:
  Vec3 e_hat_;
  Vec3 f_hat_;
};

/// Entanglement angle of sin(theta)|01> + cos(theta)|10>.
struct EntangledPairConfig {
  double theta = kPi / 4.0;

  /// Throws DomainError unless 0 <= theta <= pi/2.
  explicit EntangledPairConfig(double theta_rad);
};

/// Throws DomainError unless 0 <= theta <= pi/2.
void check_theta(double theta);

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
///
/// Rows and columns of the 4x4 form are ordered |00>, |01>, |10>, |11>,
/// the first label being particle 1. All invariants are checked by the
/// constructor, so every instance in circulation is a valid state.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPsdTol = 1e-10;

  /// `entries` is row-major with dim*dim values. Throws InvariantError.
  DensityMatrix(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  double trace() const;
  /// tr(rho^2)
  double purity() const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Gamma(k + 1/2) by the recurrence from Gamma(1/2) = sqrt(pi).
/// Throws OverflowError when the value is not representable.
double gamma_half_integer(int k);

/// log Gamma(k + 1/2), finite for every k >= 0.
double log_gamma_half_integer(int k);

/// Gamma(n + 1) / Gamma(n + 1/2), evaluated as a product so it never
/// overflows.
double gamma_ratio_int_over_half(int n);

/// Normalized momentum amplitude psi(p) in MeV^(-1/2).
double psi_amplitude(const WavePacket& pkt, double p_mev);

}  // namespace boostcoh
