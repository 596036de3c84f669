#include "boostcoh/wigner.hpp"

#include <cmath>

namespace boostcoh::wigner {

WignerHalfAngle half_angle_general(const BoostParams& boost, double chi,
                                   const GeometryConfig& geom) {
  const Vec3& e = geom.e_hat();
  const Vec3& f = geom.f_hat();
  const double e_dot_f = e[0] * f[0] + e[1] * f[1] + e[2] * f[2];
  const Vec3 e_cross_f{e[1] * f[2] - e[2] * f[1], e[2] * f[0] - e[0] * f[2],
                       e[0] * f[1] - e[1] * f[0]};

  const double ch_a = std::cosh(0.5 * boost.alpha);
  const double sh_a = std::sinh(0.5 * boost.alpha);
  const double ch_c = std::cosh(0.5 * chi);
  const double sh_c = std::sinh(0.5 * chi);

  const double denom = std::sqrt(0.5 + 0.5 * boost.cosh_alpha * std::cosh(chi) +
                                 0.5 * boost.sinh_alpha * std::sinh(chi) * e_dot_f);

  WignerHalfAngle out;
  out.cos_half = (ch_a * ch_c + sh_a * sh_c * e_dot_f) / denom;
  const double axis_scale = sh_a * sh_c / denom;
  for (int i = 0; i < 3; ++i) out.sin_half_axis[i] = axis_scale * e_cross_f[i];
  return out;
}

WignerTrig half_angle_perp(const BoostParams& boost, double x) {
  const double a = boost.sinh_alpha;
  const double b = boost.cosh_alpha;
  const double r = std::hypot(1.0, x);  // cosh chi
  const double denom = 2.0 * (1.0 + b * r);

  // (1 - b)(1 - r) rewritten without cancellation: b - 1 = a^2/(b + 1) and
  // r - 1 = x^2/(r + 1).
  const double b_minus_1 = a * a / (b + 1.0);
  const double r_minus_1 = x * x / (r + 1.0);

  WignerTrig t;
  t.cos2_half = (1.0 + b) * (1.0 + r) / denom;
  t.sin2_half = b_minus_1 * r_minus_1 / denom;
  t.sincos_half = a * x / denom;
  return t;
}

HalfAngle signed_half_angle(const WignerTrig& trig) {
  if (trig.cos2_half < 1e-14)
    throw DegenerateError("little group: cos^2(phi/2) too small to recover the sign of sin(phi/2)");
  HalfAngle h;
  h.cos = std::sqrt(trig.cos2_half);
  h.sin = trig.sincos_half / h.cos;
  return h;
}

RotationMatrix little_group_matrix(const WignerTrig& trig) {
  const HalfAngle h = signed_half_angle(trig);
  return RotationMatrix{{{Complex(h.cos), Complex(h.sin)}, {Complex(-h.sin), Complex(h.cos)}}};
}

double rotation_angle(const WignerTrig& trig) {
  const double s = std::sqrt(trig.sin2_half);
  return 2.0 * std::atan2(trig.sincos_half < 0.0 ? -s : s, std::sqrt(trig.cos2_half));
}

}  // namespace boostcoh::wigner
