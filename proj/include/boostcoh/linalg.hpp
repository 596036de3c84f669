#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boostcoh/core.hpp"

namespace boostcoh::linalg {

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm falls below
  /// off_tolerance * max(1, ||A||_F).
  double off_tolerance = 1e-13;
};

/// Eigenvalues of an n x n Hermitian matrix (row-major) by cyclic complex
/// Jacobi rotations, sorted descending. Only the upper triangle is read.
/// Throws ConvergenceError when max_sweeps is exhausted.
std::vector<double> hermitian_eigenvalues(std::span<const Complex> a,
                                          std::size_t n,
                                          const JacobiOptions& opts = {});

}  // namespace boostcoh::linalg
