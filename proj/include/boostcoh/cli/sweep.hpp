#pragma once

// Parameter sweeps over the wave-packet width and figure presets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boostcoh/core.hpp"

namespace boostcoh::cli {

inline constexpr double kNeutronMassMev = 939.36;

struct SweepMethods {
  bool perturbative = true;
  bool exact_eig = false;
  bool quadrature = false;
};

/// Parses a comma-separated subset of {perturbative, exact-eig, quadrature}.
SweepMethods parse_methods(const std::string& list);

struct SigmaGrid {
  double min = 0.0;  ///< MeV
  double max = 0.0;  ///< MeV
  int steps = 2;

  double at(int k) const;
};

struct SweepSpec {
  Scenario scenario = Scenario::single_boost;
  double theta = kPi / 4.0;
  int n = 2;
  double mass = kNeutronMassMev;
  SigmaGrid sigma_grid;
  /// (beta1, beta2); beta2 is ignored in the single-boost scenario.
  std::vector<std::pair<double, double>> betas;
  SweepMethods methods;

  /// Throws DomainError on an inconsistent spec.
  void validate() const;
};

struct SweepRow {
  double sigma = 0.0;
  double beta1 = 0.0;
  std::optional<double> beta2;
  int n = 0;
  double theta = 0.0;
  double c_l1 = 0.0;
  std::optional<double> c_f_perturbative;
  std::optional<double> c_f_exact_eig;
  std::optional<double> c_f_quadrature;
  double f1 = 0.0;
  std::optional<double> f2;

  bool operator==(const SweepRow&) const = default;
};

/// Evaluates a single (sigma, beta) configuration.
SweepRow evaluate_row(const SweepSpec& spec, double sigma, double beta1, double beta2);

/// One row per (sigma, beta configuration), sorted by sigma then beta.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// fig1: single boost, beta in {0.95, 0.8, 0.3, 0}. fig2: dual boost with
/// beta1 = beta2 over the same values. Both use m = 939.36 MeV, n = 2,
/// theta = pi/4 and sigma = 0.3 m k / 256 for k = 1..256.
SweepSpec figure_preset(const std::string& name);

}  // namespace boostcoh::cli
