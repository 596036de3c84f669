#include "boostcoh/cli/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <tuple>

#include "boostcoh/coherence.hpp"
#include "boostcoh/density.hpp"
#include "boostcoh/integrals.hpp"

namespace boostcoh::cli {

SweepMethods parse_methods(const std::string& list) {
  SweepMethods m{false, false, false};
  std::stringstream ss(list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item == "perturbative") {
      m.perturbative = true;
    } else if (item == "exact-eig") {
      m.exact_eig = true;
    } else if (item == "quadrature") {
      m.quadrature = true;
    } else {
      throw DomainError("unknown method '" + item + "' (expected perturbative, exact-eig, quadrature)");
    }
    any = true;
  }
  if (!any) throw DomainError("at least one method is required");
  return m;
}

double SigmaGrid::at(int k) const {
  if (k == steps - 1) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
  check_theta(theta);
  if (n < 0) throw DomainError("n must be a nonnegative integer (n > -1/2)");
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  if (!(sigma_grid.min > 0.0)) throw DomainError("sigma grid minimum must be positive");
  if (!(sigma_grid.max >= sigma_grid.min)) throw DomainError("sigma grid maximum below minimum");
  if (sigma_grid.steps < 2) throw DomainError("sigma grid needs at least 2 steps");
  if (betas.empty()) throw DomainError("at least one beta configuration is required");
  for (const auto& [b1, b2] : betas) {
    boost_from_beta(b1);
    if (scenario == Scenario::dual_boost) boost_from_beta(b2);
  }
  if (!methods.perturbative && !methods.exact_eig && !methods.quadrature)
    throw DomainError("at least one method is required");
}

SweepRow evaluate_row(const SweepSpec& spec, double sigma, double beta1, double beta2) {
  const bool dual = spec.scenario == Scenario::dual_boost;
  const double som = sigma / spec.mass;
  const WavePacket pkt(spec.n, sigma, spec.mass);

  std::vector<BoostParams> boosts{boost_from_beta(beta1)};
  if (dual) boosts.push_back(boost_from_beta(beta2));

  const auto bounds = integrals::n_bounds(som, spec.scenario);
  if (!bounds.admits(spec.n)) {
    std::ostringstream os;
    os << "n = " << spec.n << " outside -1/2 < n <= " << bounds.upper << " at sigma = " << sigma;
    throw DomainError(os.str());
  }

  SweepRow row;
  row.sigma = sigma;
  row.beta1 = beta1;
  if (dual) row.beta2 = beta2;
  row.n = spec.n;
  row.theta = spec.theta;

  const auto f1 = integrals::f_factor(spec.n, boosts[0], som);
  row.f1 = f1.f;
  std::optional<integrals::PerturbativeFactor> f2;
  if (dual) {
    f2 = integrals::f_factor(spec.n, boosts[1], som);
    row.f2 = f2->f;
  }

  if (spec.methods.perturbative || spec.methods.exact_eig) {
    const DensityMatrix rho = dual ? density::rho_dual_boost_perturbative(spec.theta, f1, *f2)
                                   : density::rho_single_boost_perturbative(spec.theta, f1);
    row.c_l1 = coherence::c_l1(rho);
    if (spec.methods.perturbative)
      row.c_f_perturbative = coherence::c_frobenius_perturbative(spec.n, boosts, som);
    if (spec.methods.exact_eig) row.c_f_exact_eig = coherence::report_eigensolver(rho).c_frobenius;
  }
  if (spec.methods.quadrature) {
    const auto m1 = integrals::moments_quadrature(pkt, boosts[0]);
    const DensityMatrix rho =
        dual ? density::rho_dual_boost_general(spec.theta, m1,
                                               integrals::moments_quadrature(pkt, boosts[1]))
             : density::rho_single_boost_general(spec.theta, m1);
    const auto report = coherence::report_eigensolver(rho);
    row.c_f_quadrature = report.c_frobenius;
    if (!spec.methods.perturbative && !spec.methods.exact_eig) row.c_l1 = report.c_l1;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  auto betas = spec.betas;
  if (spec.scenario == Scenario::single_boost)
    for (auto& b : betas) b.second = 0.0;
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.sigma_grid.steps) * betas.size());
  for (int k = 0; k < spec.sigma_grid.steps; ++k) {
    const double sigma = spec.sigma_grid.at(k);
    for (const auto& [b1, b2] : betas) rows.push_back(evaluate_row(spec, sigma, b1, b2));
  }
  return rows;
}

SweepSpec figure_preset(const std::string& name) {
  SweepSpec spec;
  if (name == "fig1") {
    spec.scenario = Scenario::single_boost;
  } else if (name == "fig2") {
    spec.scenario = Scenario::dual_boost;
  } else {
    throw DomainError("unknown figure '" + name + "' (expected fig1 or fig2)");
  }
  spec.theta = kPi / 4.0;
  spec.n = 2;
  spec.mass = kNeutronMassMev;
  spec.sigma_grid = SigmaGrid{0.3 * spec.mass / 256.0, 0.3 * spec.mass, 256};
  for (double b : {0.95, 0.8, 0.3, 0.0}) spec.betas.emplace_back(b, b);
  spec.methods = SweepMethods{true, true, true};
  return spec;
}

}  // namespace boostcoh::cli
