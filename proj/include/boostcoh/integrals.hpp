#pragma once

// Momentum moments of the Wigner half-angle combinations:
//
//   I1 = <cos^2(phi/2)>,  I2 = <sin(phi/2) cos(phi/2)>,  I3 = <sin^2(phi/2)>
//
// averaged over |psi(p)|^2. After kappa = p/sigma each moment becomes
// (1/Gamma(n+1/2)) * integral kappa^(2n) exp(-kappa^2) g(sigma kappa / m),
// which is evaluated exactly with Gauss-Hermite quadrature or to
// O((sigma/m)^2) in closed form. The per-particle moments J_i, K_i, L_i of
// the two-boost scenario are the same quantities with that particle's boost.

#include <memory>
#include <vector>

#include "boostcoh/core.hpp"

namespace boostcoh::integrals {

enum class MomentMethod { quadrature, perturbative };

/// (I1, I2, I3) with I1 + I3 = 1. Build with make().
class MomentIntegrals {
 public:
  /// Throws InvariantError unless |i1 + i3 - 1| <= 1e-10, i1 and i3 lie in
  /// [0, 1] and |i2| <= 1/2.
  static MomentIntegrals make(double i1, double i2, double i3, MomentMethod method);

  /// The unboosted moments (1, 0, 0).
  static MomentIntegrals identity(MomentMethod method = MomentMethod::perturbative);

  double i1() const { return i1_; }
  double i2() const { return i2_; }
  double i3() const { return i3_; }
  MomentMethod method() const { return method_; }

 private:
  MomentIntegrals(double i1, double i2, double i3, MomentMethod m)
      : i1_(i1), i2_(i2), i3_(i3), method_(m) {}
  double i1_;
  double i2_;
  double i3_;
  MomentMethod method_;
};

/// The O((sigma/m)^2) mixing coefficient
/// F = ((2n+1)/8) ((cosh a - 1)/(cosh a + 1)) (sigma/m)^2.
struct PerturbativeFactor {
  double f = 0.0;

  /// False when 1 - F would leave [0, 1], i.e. the expansion is meaningless.
  bool moments_in_range() const { return f <= 1.0; }
};

/// Nodes (ascending, exactly symmetric) and weights for the weight
/// exp(-kappa^2).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws DomainError unless 2 <= order <= 256 and ConvergenceError if the
/// root refinement stalls. Rules are memoized per order and shared.
std::shared_ptr<const GaussHermiteRule> gauss_hermite_nodes(int order);

struct QuadratureOptions {
  int min_order = 16;
  int max_order = 256;
  double rel_tolerance = 1e-12;
};

/// Thrown when order doubling reaches max_order without meeting the
/// tolerance. Carries the best estimate and the last change observed.
class QuadratureToleranceError : public ConvergenceError {
 public:
  QuadratureToleranceError(const std::string& what, MomentIntegrals best, double delta)
      : ConvergenceError(what), best_(best), delta_(delta) {}
  const MomentIntegrals& best_estimate() const { return best_; }
  double achieved_delta() const { return delta_; }

 private:
  MomentIntegrals best_;
  double delta_;
};

/// Moments on a single Gauss-Hermite rule of the given order.
MomentIntegrals moments_at_order(const WavePacket& pkt, const BoostParams& boost, int order);

/// Moments with order doubling from min_order until successive estimates
/// agree to rel_tolerance in every component.
MomentIntegrals moments_quadrature(const WavePacket& pkt, const BoostParams& boost,
                                   const QuadratureOptions& opts = {});

/// Throws DomainError unless n >= 0 and 0 < sigma_over_m < 1.
PerturbativeFactor f_factor(int n, const BoostParams& boost, double sigma_over_m);

/// (1 - F, 0, F). Throws DomainError when F > 1.
MomentIntegrals moments_perturbative(int n, const BoostParams& boost, double sigma_over_m);

struct I2Parity {
  double value = 0.0;    ///< parity factor times bracket; zero for integer n
  double bracket = 0.0;  ///< Gamma(n+1)/Gamma(n+1/2) sinh a / (2(cosh a + 1)) (sigma/m)
};

/// First-order I2 for integer n. The parity factor (1 - (-1)^(2n))/2
/// vanishes, so value is always 0; the bracket is reported for display.
I2Parity i2_parity_term(int n, const BoostParams& boost, double sigma_over_m);

/// Admissible range lower < n <= upper for the generalization exponent.
struct NBounds {
  double lower = -0.5;  ///< open
  double upper = 0.0;   ///< closed

  bool admits(double n) const { return n > lower && n <= upper; }
};

/// single: n <= 3 (m/sigma)^2 - 1/2, dual: n <= (3/2)(m/sigma)^2 - 1/2.
/// Throws DomainError unless 0 < sigma_over_m < 1.
NBounds n_bounds(double sigma_over_m, Scenario scenario);

}  // namespace boostcoh::integrals
