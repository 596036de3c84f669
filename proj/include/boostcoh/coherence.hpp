#pragma once

// l1-norm and Frobenius-norm coherence of reduced spin states.
//
//   C_l1 = sum_{i != j} |rho_ij|
//   C_F  = sqrt( d/(d-1) * sum_i (lambda_i - 1/d)^2 )
//
// C_l1 is basis dependent and always taken from the matrix; C_F depends on
// the spectrum only.

#include <cstddef>
#include <span>
#include <vector>

#include "boostcoh/core.hpp"
#include "boostcoh/integrals.hpp"

namespace boostcoh::coherence {

/// Eigenvalues sorted descending, summing to 1.
class Spectrum {
 public:
  /// Sorts the input. Throws InvariantError unless the sum is 1 within
  /// 1e-10 and every value lies in [-1e-10, 1 + 1e-10].
  static Spectrum make(std::vector<double> eigenvalues);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  explicit Spectrum(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

enum class CoherenceMethod { analytic, eigensolver, perturbative };

struct CoherenceReport {
  double c_l1 = 0.0;
  double c_frobenius = 0.0;
  Spectrum spectrum;
  CoherenceMethod method = CoherenceMethod::analytic;
  std::size_t dim = 0;
};

double c_l1(const DensityMatrix& rho);

/// Throws DomainError unless d equals the spectrum length and d >= 2.
double c_frobenius(const Spectrum& spec, std::size_t d);
inline double c_frobenius(const Spectrum& spec) { return c_frobenius(spec, spec.size()); }

/// {1 - F, F, 0, 0}, independent of theta. Throws DomainError unless
/// 0 <= F < 1/2.
Spectrum spectrum_single_boost(double theta, integrals::PerturbativeFactor f);

/// xi_{1,2} = (F1+F2)/2 +- sqrt(F1^2 + F2^2 - 2 F1 F2 cos 4theta)/2,
/// xi_3 = 1 - (F1+F2), xi_4 = 0. Throws DomainError unless F1 + F2 < 1/2.
Spectrum spectrum_dual_boost(double theta, integrals::PerturbativeFactor f1,
                             integrals::PerturbativeFactor f2);

/// Jacobi eigensolver spectrum of any density matrix.
Spectrum hermitian_eigenvalues(const DensityMatrix& rho);

/// Closed-form C_F to O((sigma/m)^2): 1 - (4/3) F for one boost and
/// 1 - (4/3)(F1 + F2) for two. `boosts` holds one or two frames. Throws
/// DomainError when n falls outside n_bounds for the scenario.
double c_frobenius_perturbative(int n, std::span<const BoostParams> boosts,
                                double sigma_over_m);

/// C_l1 from the matrix, spectrum from the Jacobi solver.
CoherenceReport report_eigensolver(const DensityMatrix& rho);

/// Perturbative report for one or two boosts: analytic spectrum,
/// closed-form C_F, C_l1 from the first-order matrix.
CoherenceReport report_perturbative(double theta, int n, std::span<const BoostParams> boosts,
                                    double sigma_over_m);

}  // namespace boostcoh::coherence
