#include "boostcoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace boostcoh::linalg {

namespace {

double off_diagonal_norm(const std::vector<Complex>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * std::norm(a[i * n + j]);
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::span<const Complex> in,
                                          std::size_t n,
                                          const JacobiOptions& opts) {
  if (in.size() != n * n) throw DomainError("hermitian_eigenvalues: size mismatch");

  std::vector<Complex> a(n * n);
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = in[i * n + i].real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i * n + j] = in[i * n + j];
      a[j * n + i] = std::conj(in[i * n + j]);
    }
  }
  for (const auto& v : a) frob += std::norm(v);
  const double threshold = opts.off_tolerance * std::max(1.0, std::sqrt(frob));

  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return a[r * n + c]; };

  bool converged = off_diagonal_norm(a, n) < threshold;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double h = std::abs(at(p, q));
        if (h == 0.0) continue;

        // Rotate the phase of index q so that a(p,q) becomes real positive.
        const Complex phase = at(p, q) / h;
        for (std::size_t i = 0; i < n; ++i) {
          at(i, q) *= std::conj(phase);
          at(q, i) *= phase;
        }
        at(q, q) = at(q, q).real();
        at(p, q) = h;
        at(q, p) = h;

        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * h);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = at(r, p);
          const Complex arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
          at(p, r) = std::conj(at(r, p));
          at(q, r) = std::conj(at(r, q));
        }
        at(p, p) = app - t * h;
        at(q, q) = aqq + t * h;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
    converged = off_diagonal_norm(a, n) < threshold;
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eigenvalues: no convergence after " +
                           std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace boostcoh::linalg
