#include "boostcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "boostcoh/density.hpp"
#include "boostcoh/linalg.hpp"

namespace boostcoh::coherence {

using integrals::PerturbativeFactor;

namespace {

Scenario scenario_of(std::span<const BoostParams> boosts) {
  if (boosts.size() == 1) return Scenario::single_boost;
  if (boosts.size() == 2) return Scenario::dual_boost;
  throw DomainError("coherence: expected one or two boosts");
}

void check_n(int n, double sigma_over_m, Scenario scenario) {
  const auto bounds = integrals::n_bounds(sigma_over_m, scenario);
  if (!bounds.admits(n)) {
    std::ostringstream os;
    os << "n = " << n << " outside the admissible range -1/2 < n <= " << bounds.upper
       << (scenario == Scenario::single_boost ? " (3 (m/sigma)^2 - 1/2)"
                                              : " ((3/2) (m/sigma)^2 - 1/2)");
    throw DomainError(os.str());
  }
}

}  // namespace

Spectrum Spectrum::make(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw InvariantError("Spectrum: empty");
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  const double sum = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-10) throw InvariantError("Spectrum: eigenvalues do not sum to 1");
  for (double v : eigenvalues)
    if (!(v >= -1e-10 && v <= 1.0 + 1e-10))
      throw InvariantError("Spectrum: eigenvalue outside [0, 1]");
  return Spectrum(std::move(eigenvalues));
}

double c_l1(const DensityMatrix& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

double c_frobenius(const Spectrum& spec, std::size_t d) {
  if (d < 2 || d != spec.size())
    throw DomainError("c_frobenius: d must equal the spectrum length and be at least 2");
  const double inv_d = 1.0 / static_cast<double>(d);
  double sum = 0.0;
  for (double v : spec.values()) sum += (v - inv_d) * (v - inv_d);
  return std::sqrt(static_cast<double>(d) * sum / static_cast<double>(d - 1));
}

Spectrum spectrum_single_boost(double theta, PerturbativeFactor f) {
  check_theta(theta);
  if (!(f.f >= 0.0 && f.f < 0.5))
    throw DomainError("single-boost spectrum requires 0 <= F < 1/2");
  return Spectrum::make({f.f, 1.0 - f.f, 0.0, 0.0});
}

Spectrum spectrum_dual_boost(double theta, PerturbativeFactor f1, PerturbativeFactor f2) {
  check_theta(theta);
  if (!(f1.f >= 0.0 && f2.f >= 0.0 && f1.f + f2.f < 0.5))
    throw DomainError("dual-boost spectrum requires F1, F2 >= 0 and F1 + F2 < 1/2");
  const double a = f1.f, b = f2.f;
  const double disc = std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(4.0 * theta)));
  const double mid = 0.5 * (a + b);
  return Spectrum::make({mid + 0.5 * disc, mid - 0.5 * disc, 1.0 - (a + b), 0.0});
}

Spectrum hermitian_eigenvalues(const DensityMatrix& rho) {
  return Spectrum::make(linalg::hermitian_eigenvalues(rho.entries(), rho.dim()));
}

double c_frobenius_perturbative(int n, std::span<const BoostParams> boosts,
                                double sigma_over_m) {
  const Scenario scenario = scenario_of(boosts);
  check_n(n, sigma_over_m, scenario);
  double sum = 0.0;
  for (const auto& b : boosts) sum += integrals::f_factor(n, b, sigma_over_m).f;
  return 1.0 - (4.0 / 3.0) * sum;
}

CoherenceReport report_eigensolver(const DensityMatrix& rho) {
  Spectrum spec = hermitian_eigenvalues(rho);
  const double cf = c_frobenius(spec);
  return CoherenceReport{c_l1(rho), cf, std::move(spec), CoherenceMethod::eigensolver, rho.dim()};
}

CoherenceReport report_perturbative(double theta, int n, std::span<const BoostParams> boosts,
                                    double sigma_over_m) {
  const Scenario scenario = scenario_of(boosts);
  const double cf = c_frobenius_perturbative(n, boosts, sigma_over_m);
  const PerturbativeFactor f1 = integrals::f_factor(n, boosts[0], sigma_over_m);
  if (scenario == Scenario::single_boost) {
    const auto rho = density::rho_single_boost_perturbative(theta, f1);
    return CoherenceReport{c_l1(rho), cf, spectrum_single_boost(theta, f1),
                           CoherenceMethod::perturbative, 4};
  }
  const PerturbativeFactor f2 = integrals::f_factor(n, boosts[1], sigma_over_m);
  const auto rho = density::rho_dual_boost_perturbative(theta, f1, f2);
  return CoherenceReport{c_l1(rho), cf, spectrum_dual_boost(theta, f1, f2),
                         CoherenceMethod::perturbative, 4};
}

}  // namespace boostcoh::coherence
