#pragma once

// Wigner rotation of a massive spin-1/2 particle seen from a boosted frame.
//
// The particle has four-momentum m(cosh chi, sinh chi f_hat) and the frame
// moves with velocity tanh(alpha) e_hat. The little-group element acts on
// spin as cos(phi/2) 1 + i sin(phi/2) (Sigma . n_hat).

#include <array>

#include "boostcoh/core.hpp"

namespace boostcoh::wigner {

/// cos(phi/2) and sin(phi/2) n_hat.
struct WignerHalfAngle {
  double cos_half = 1.0;
  Vec3 sin_half_axis{0.0, 0.0, 0.0};
};

/// The three quadratic half-angle combinations that enter the density
/// matrices.
struct WignerTrig {
  double cos2_half = 1.0;    ///< cos^2(phi/2)
  double sin2_half = 0.0;    ///< sin^2(phi/2)
  double sincos_half = 0.0;  ///< sin(phi/2) cos(phi/2)
};

/// Signed half-angle pair (cos(phi/2), sin(phi/2)).
struct HalfAngle {
  double cos = 1.0;
  double sin = 0.0;
};

using RotationMatrix = std::array<std::array<Complex, 2>, 2>;

/// Half angle and axis for arbitrary boost and momentum directions.
WignerHalfAngle half_angle_general(const BoostParams& boost, double chi,
                                   const GeometryConfig& geom);

/// Half-angle combinations for e_hat = z, f_hat = x, in terms of
/// x = p/m = sinh chi. Negative x is allowed.
WignerTrig half_angle_perp(const BoostParams& boost, double p_over_m);

/// Recovers (cos(phi/2), sin(phi/2)) with cos(phi/2) >= 0 and the sign of
/// sin(phi/2) taken from sincos_half. Throws DegenerateError when
/// cos2_half < 1e-14.
HalfAngle signed_half_angle(const WignerTrig& trig);

/// Spin rotation in the basis action D|0> = c|0> - s|1>, D|1> = s|0> + c|1>,
/// i.e. the real matrix [[c, s], [-s, c]]. Throws DegenerateError as above.
RotationMatrix little_group_matrix(const WignerTrig& trig);

/// Full rotation angle phi in radians.
double rotation_angle(const WignerTrig& trig);

}  // namespace boostcoh::wigner
