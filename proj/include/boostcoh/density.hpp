#pragma once

// Reduced spin density matrices of the pair sin(theta)|01> + cos(theta)|10>
// after one particle (single boost) or both particles (dual boost) are
// viewed from boosted frames, with momentum traced out.

#include "boostcoh/core.hpp"
#include "boostcoh/integrals.hpp"
#include "boostcoh/wigner.hpp"

namespace boostcoh::density {

/// Amplitudes of |00>, |01>, |10>, |11> after rotating particle 1:
/// a = sin(theta) cos(phi/2) on |01>, b = -sin(theta) sin(phi/2) on |11>,
/// c = cos(theta) sin(phi/2) on |00>, d = cos(theta) cos(phi/2) on |10>.
struct SpinAmplitudesSingle {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double c_coef = 0.0;
  double d_coef = 0.0;
};

/// Amplitudes of |00> (p), |01> (q), |10> (r), |11> (s) after rotating
/// both particles.
struct SpinAmplitudesDual {
  double p_coef = 0.0;
  double q_coef = 0.0;
  double r_coef = 0.0;
  double s_coef = 0.0;
};

enum class Keep { first, second };

/// Throws DomainError unless cos^2 + sin^2 = 1 within 1e-10.
SpinAmplitudesSingle amplitudes_single(double theta, wigner::HalfAngle phi_half);

/// Reduces to amplitudes_single with p->c, q->a, r->d, s->b when phi2 = 0.
SpinAmplitudesDual amplitudes_dual(double theta, wigner::HalfAngle phi1_half,
                                   wigner::HalfAngle phi2_half);

/// Projector onto sin(theta)|01> + cos(theta)|10>.
DensityMatrix pure_initial_state(double theta);

/// Single-boost 4x4 matrix in terms of (I1, I2, I3). Accepts nonzero I2 so
/// quadrature moments can be fed in directly.
DensityMatrix rho_single_boost_general(double theta, const integrals::MomentIntegrals& m);

/// X-shaped single-boost matrix with I1 = 1 - F, I2 = 0, I3 = F.
/// Throws DomainError unless 0 <= F < 1/2.
DensityMatrix rho_single_boost_perturbative(double theta, integrals::PerturbativeFactor f);

/// Dual-boost first-order matrix. Corners are
///   |00><00| = sin^2 F1 + cos^2 F2,   |11><11| = sin^2 F2 + cos^2 F1,
/// anti-diagonal -sin cos (F1 + F2), inner block weight 1 - F1 - F2.
/// This labelling pairs F1 with sin^2(theta) in the |00> corner, whereas
/// rho_dual_boost_general pairs particle 1 with cos^2(theta) there; the two
/// agree under F1 <-> F2, which leaves spectra and l1 coherence unchanged.
/// Throws DomainError unless F1, F2 >= 0 and F1 + F2 < 1/2.
DensityMatrix rho_dual_boost_perturbative(double theta, integrals::PerturbativeFactor f1,
                                          integrals::PerturbativeFactor f2);

/// Dual-boost matrix from per-particle moments (J_i, K_i, L_i) = (I1, I2, I3)
/// of each particle, obtained by averaging the outer product of the
/// (p, q, r, s) amplitudes over both momenta. Keeps K_i and all products of
/// moments, so it is exact when fed exact moments. With particle 2
/// unboosted it equals rho_single_boost_general.
DensityMatrix rho_dual_boost_general(double theta, const integrals::MomentIntegrals& m1,
                                     const integrals::MomentIntegrals& m2);

/// Bipartite partial trace in the |00>,|01>,|10>,|11> ordering. Keep::first
/// traces out particle 2.
DensityMatrix partial_trace(const DensityMatrix& rho4, Keep keep);

}  // namespace boostcoh::density
