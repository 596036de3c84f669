#include "boostcoh/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "boostcoh/wigner.hpp"

namespace boostcoh::integrals {

namespace {

constexpr double kPiMinusQuarter = 0.75112554446494248286;  // pi^(-1/4)
constexpr double kRangeSlack = 1e-12;

void check_sigma_over_m(double sigma_over_m) {
  if (!(sigma_over_m > 0.0 && sigma_over_m < 1.0)) {
    std::ostringstream os;
    os << "sigma/m must satisfy 0 < sigma/m < 1 (got " << sigma_over_m << ")";
    throw DomainError(os.str());
  }
}

// Number of eigenvalues below x of the Jacobi matrix of the Hermite
// recurrence (zero diagonal, off-diagonals sqrt(k/2)), by Sturm sequence.
int count_below(int n, double x) {
  int count = 0;
  double d = -x;
  for (int k = 0; k < n; ++k) {
    if (k > 0) d = -x - (0.5 * k) / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

// Orthonormal Hermite values: p_n(z) and sqrt(2n) p_{n-1}(z) = p_n'(z).
void hermite_orthonormal(int n, double z, double& p_n, double& dp_n) {
  double p1 = kPiMinusQuarter;
  double p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
  }
  p_n = p1;
  dp_n = std::sqrt(2.0 * n) * p2;
}

// Roots bracketed by Sturm bisection, polished by Newton on the orthonormal
// recurrence, which also keeps the outer weights accurate in the relative
// sense.
GaussHermiteRule build_rule(int order) {
  const int n = order;
  std::vector<double> x(n), w(n);
  const double bound = 2.0 * std::sqrt(0.5 * n) + 1.0;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    const int k = n - 1 - i;  // index of the root counted from the smallest
    double lo = 0.0, hi = bound;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(n, mid) <= k) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double z = 0.5 * (lo + hi);
    if (n % 2 == 1 && i == half - 1) z = 0.0;

    double p = 0.0, dp = 0.0;
    for (int it = 0; it < 3 && z != 0.0; ++it) {
      hermite_orthonormal(n, z, p, dp);
      const double step = p / dp;
      if (!std::isfinite(step) || std::abs(step) > hi - lo + 1e-12)
        throw ConvergenceError("gauss_hermite_nodes: root refinement failed at order " +
                               std::to_string(order));
      z -= step;
    }
    hermite_orthonormal(n, z, p, dp);
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (dp * dp);
    w[n - 1 - i] = w[i];
  }

  GaussHermiteRule rule;
  rule.nodes.assign(x.rbegin(), x.rend());
  rule.weights.assign(w.rbegin(), w.rend());
  return rule;
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

double max_rel_change(const MomentIntegrals& a, const MomentIntegrals& b) {
  auto rel = [](double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
  };
  return std::max({rel(a.i1(), b.i1()), rel(a.i2(), b.i2()), rel(a.i3(), b.i3())});
}

}  // namespace

MomentIntegrals MomentIntegrals::make(double i1, double i2, double i3, MomentMethod method) {
  if (!std::isfinite(i1) || !std::isfinite(i2) || !std::isfinite(i3))
    throw InvariantError("MomentIntegrals: non-finite moment");
  if (std::abs(i1 + i3 - 1.0) > 1e-10) throw InvariantError("MomentIntegrals: I1 + I3 != 1");
  if (i1 < -kRangeSlack || i1 > 1.0 + kRangeSlack || i3 < -kRangeSlack || i3 > 1.0 + kRangeSlack)
    throw InvariantError("MomentIntegrals: I1 or I3 outside [0, 1]");
  if (std::abs(i2) > 0.5 + kRangeSlack) throw InvariantError("MomentIntegrals: |I2| > 1/2");
  return MomentIntegrals(i1, i2, i3, method);
}

MomentIntegrals MomentIntegrals::identity(MomentMethod method) {
  return MomentIntegrals(1.0, 0.0, 0.0, method);
}

std::shared_ptr<const GaussHermiteRule> gauss_hermite_nodes(int order) {
  if (order < 2 || order > 256)
    throw DomainError("gauss_hermite_nodes: order must lie in [2, 256]");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GaussHermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const GaussHermiteRule>(build_rule(order));
  return slot;
}

MomentIntegrals moments_at_order(const WavePacket& pkt, const BoostParams& boost, int order) {
  const auto rule = gauss_hermite_nodes(order);
  const int n = pkt.n();
  const double log_gamma = log_gamma_half_integer(n);
  const double s_over_m = pkt.sigma_over_mass();

  // kappa^(2n) / Gamma(n + 1/2) folded into the weight in log space.
  auto weight = [&](std::size_t i) {
    const double k = rule->nodes[i];
    if (k == 0.0) return n == 0 ? rule->weights[i] * std::exp(-log_gamma) : 0.0;
    return rule->weights[i] * std::exp(2.0 * n * std::log(std::abs(k)) - log_gamma);
  };

  // Mirror-image nodes are paired so odd integrands cancel exactly.
  long double s1 = 0.0L, s2 = 0.0L, s3 = 0.0L;
  const std::size_t m = rule->nodes.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    const std::size_t j = m - 1 - i;
    const double wt = weight(j);
    const auto pos = wigner::half_angle_perp(boost, s_over_m * rule->nodes[j]);
    const auto neg = wigner::half_angle_perp(boost, s_over_m * rule->nodes[i]);
    s1 += static_cast<long double>(wt) * (pos.cos2_half + neg.cos2_half);
    s2 += static_cast<long double>(wt) * (pos.sincos_half + neg.sincos_half);
    s3 += static_cast<long double>(wt) * (pos.sin2_half + neg.sin2_half);
  }
  if (m % 2 == 1) {
    const std::size_t c = m / 2;
    const double wt = weight(c);
    const auto mid = wigner::half_angle_perp(boost, 0.0);
    s1 += static_cast<long double>(wt) * mid.cos2_half;
    s2 += static_cast<long double>(wt) * mid.sincos_half;
    s3 += static_cast<long double>(wt) * mid.sin2_half;
  }
  // Divide by the rule's own normalization so I1 + I3 = 1 at every order,
  // including orders too low to integrate kappa^(2n) exactly.
  const long double total = s1 + s3;
  if (!(total > 0.0L) || !std::isfinite(static_cast<double>(total)))
    throw ConvergenceError("moments_at_order: weight underflow at order " + std::to_string(order));
  return MomentIntegrals::make(static_cast<double>(s1 / total), static_cast<double>(s2 / total),
                               static_cast<double>(s3 / total), MomentMethod::quadrature);
}

MomentIntegrals moments_quadrature(const WavePacket& pkt, const BoostParams& boost,
                                   const QuadratureOptions& opts) {
  if (boost.sinh_alpha == 0.0) return MomentIntegrals::identity(MomentMethod::quadrature);
  int order = std::max(2, opts.min_order);
  MomentIntegrals prev = moments_at_order(pkt, boost, order);
  double delta = 0.0;
  while (order * 2 <= opts.max_order) {
    order *= 2;
    const MomentIntegrals cur = moments_at_order(pkt, boost, order);
    delta = max_rel_change(prev, cur);
    if (close_rel(prev.i1(), cur.i1(), opts.rel_tolerance) &&
        close_rel(prev.i2(), cur.i2(), opts.rel_tolerance) &&
        close_rel(prev.i3(), cur.i3(), opts.rel_tolerance))
      return cur;
    prev = cur;
  }
  std::ostringstream os;
  os << "moments_quadrature: relative tolerance " << opts.rel_tolerance << " not met at order "
     << order << " (last change " << delta << ")";
  throw QuadratureToleranceError(os.str(), prev, delta);
}

PerturbativeFactor f_factor(int n, const BoostParams& boost, double sigma_over_m) {
  if (n < 0) throw DomainError("n must be a nonnegative integer (n > -1/2)");
  check_sigma_over_m(sigma_over_m);
  // (cosh a - 1)/(cosh a + 1) = (sinh a / (cosh a + 1))^2 = tanh^2(a/2)
  const double t = boost.sinh_alpha / (boost.cosh_alpha + 1.0);
  return PerturbativeFactor{(2.0 * n + 1.0) / 8.0 * t * t * sigma_over_m * sigma_over_m};
}

MomentIntegrals moments_perturbative(int n, const BoostParams& boost, double sigma_over_m) {
  const PerturbativeFactor f = f_factor(n, boost, sigma_over_m);
  if (!f.moments_in_range()) {
    std::ostringstream os;
    os << "perturbative moments invalid: F = " << f.f << " > 1 leaves I1 = 1 - F negative";
    throw DomainError(os.str());
  }
  return MomentIntegrals::make(1.0 - f.f, 0.0, f.f, MomentMethod::perturbative);
}

I2Parity i2_parity_term(int n, const BoostParams& boost, double sigma_over_m) {
  if (n < 0) throw DomainError("n must be a nonnegative integer (n > -1/2)");
  I2Parity out;
  out.bracket = gamma_ratio_int_over_half(n) * boost.sinh_alpha /
                (2.0 * (boost.cosh_alpha + 1.0)) * sigma_over_m;
  // (1 - (-1)^(2n))/2 is zero for every integer n.
  out.value = 0.0;
  return out;
}

NBounds n_bounds(double sigma_over_m, Scenario scenario) {
  check_sigma_over_m(sigma_over_m);
  const double inv2 = 1.0 / (sigma_over_m * sigma_over_m);
  NBounds b;
  b.upper = (scenario == Scenario::single_boost ? 3.0 : 1.5) * inv2 - 0.5;
  return b;
}

}  // namespace boostcoh::integrals
