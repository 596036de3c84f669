#include "boostcoh/density.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace boostcoh::density {

namespace {

using integrals::MomentIntegrals;
using integrals::PerturbativeFactor;
using Coeffs = std::array<std::array<double, 2>, 2>;

void check_half_angle(const wigner::HalfAngle& h) {
  if (std::abs(h.cos * h.cos + h.sin * h.sin - 1.0) > 1e-10)
    throw DomainError("half angle: cos^2 + sin^2 must equal 1");
}

// Second moments of (cos(phi/2), sin(phi/2)) for one particle.
Coeffs moment_matrix(const MomentIntegrals& m) {
  return Coeffs{{{m.i1(), m.i2()}, {m.i2(), m.i3()}}};
}

}  // namespace

SpinAmplitudesSingle amplitudes_single(double theta, wigner::HalfAngle h) {
  check_half_angle(h);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  return SpinAmplitudesSingle{st * h.cos, -st * h.sin, ct * h.sin, ct * h.cos};
}

SpinAmplitudesDual amplitudes_dual(double theta, wigner::HalfAngle h1, wigner::HalfAngle h2) {
  check_half_angle(h1);
  check_half_angle(h2);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  SpinAmplitudesDual out;
  out.p_coef = st * h1.cos * h2.sin + ct * h1.sin * h2.cos;
  out.q_coef = st * h1.cos * h2.cos - ct * h1.sin * h2.sin;
  out.r_coef = -(st * h1.sin * h2.sin - ct * h1.cos * h2.cos);
  out.s_coef = -(st * h1.sin * h2.cos + ct * h1.cos * h2.sin);
  return out;
}

DensityMatrix pure_initial_state(double theta) {
  check_theta(theta);
  const std::array<double, 4> v{0.0, std::sin(theta), std::cos(theta), 0.0};
  std::vector<Complex> e(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e[i * 4 + j] = v[i] * v[j];
  return DensityMatrix(4, std::move(e));
}

DensityMatrix rho_single_boost_general(double theta, const MomentIntegrals& m) {
  check_theta(theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double ss = s * s, cc = c * c, sc = s * c;
  const double i1 = m.i1(), i2 = m.i2(), i3 = m.i3();
  std::vector<Complex> e{
      cc * i3,  sc * i2,  cc * i2,  -sc * i3,
      sc * i2,  ss * i1,  sc * i1,  -ss * i2,
      cc * i2,  sc * i1,  cc * i1,  -sc * i2,
      -sc * i3, -ss * i2, -sc * i2, ss * i3,
  };
  return DensityMatrix(4, std::move(e));
}

DensityMatrix rho_single_boost_perturbative(double theta, PerturbativeFactor f) {
  check_theta(theta);
  if (!(f.f >= 0.0 && f.f < 0.5)) {
    std::ostringstream os;
    os << "single-boost perturbative matrix requires 0 <= F < 1/2 (got F = " << f.f << ")";
    throw DomainError(os.str());
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double F = f.f, G = 1.0 - f.f;
  std::vector<Complex> e{
      c * c * F,  0.0,        0.0,        -s * c * F,
      0.0,        s * s * G,  s * c * G,  0.0,
      0.0,        s * c * G,  c * c * G,  0.0,
      -s * c * F, 0.0,        0.0,        s * s * F,
  };
  return DensityMatrix(4, std::move(e));
}

DensityMatrix rho_dual_boost_perturbative(double theta, PerturbativeFactor f1,
                                          PerturbativeFactor f2) {
  check_theta(theta);
  if (!(f1.f >= 0.0 && f2.f >= 0.0 && f1.f + f2.f < 0.5)) {
    std::ostringstream os;
    os << "dual-boost perturbative matrix requires F1, F2 >= 0 and F1 + F2 < 1/2 (got "
       << f1.f << " + " << f2.f << ")";
    throw DomainError(os.str());
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double ss = s * s, cc = c * c, sc = s * c;
  const double sum = f1.f + f2.f;
  const double G = 1.0 - sum;
  std::vector<Complex> e{
      ss * f1.f + cc * f2.f, 0.0,    0.0,    -sc * sum,
      0.0,                   ss * G, sc * G, 0.0,
      0.0,                   sc * G, cc * G, 0.0,
      -sc * sum,             0.0,    0.0,    ss * f2.f + cc * f1.f,
  };
  return DensityMatrix(4, std::move(e));
}

DensityMatrix rho_dual_boost_general(double theta, const MomentIntegrals& m1,
                                     const MomentIntegrals& m2) {
  check_theta(theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);

  // Each amplitude is a bilinear form sum_uv X[u][v] t1_u t2_v in
  // t_i = (cos(phi_i/2), sin(phi_i/2)); rows u belong to particle 1.
  const std::array<Coeffs, 4> amp{
      Coeffs{{{0.0, s}, {c, 0.0}}},    // p: |00>
      Coeffs{{{s, 0.0}, {0.0, -c}}},   // q: |01>
      Coeffs{{{c, 0.0}, {0.0, -s}}},   // r: |10>
      Coeffs{{{0.0, -c}, {-s, 0.0}}},  // s: |11>
  };
  const Coeffs M1 = moment_matrix(m1);
  const Coeffs M2 = moment_matrix(m2);

  std::vector<Complex> e(16);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      double acc = 0.0;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          for (int up = 0; up < 2; ++up)
            for (int vp = 0; vp < 2; ++vp)
              acc += amp[x][u][v] * amp[y][up][vp] * M1[u][up] * M2[v][vp];
      e[x * 4 + y] = acc;
    }
  }
  return DensityMatrix(4, std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho4, Keep keep) {
  if (rho4.dim() != 4) throw DomainError("partial_trace: expects a two-qubit (4x4) matrix");
  std::vector<Complex> e(4, Complex(0.0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        e[i * 2 + j] += keep == Keep::first ? rho4(2 * i + k, 2 * j + k)
                                            : rho4(2 * k + i, 2 * k + j);
      }
    }
  }
  return DensityMatrix(2, std::move(e));
}

}  // namespace boostcoh::density
