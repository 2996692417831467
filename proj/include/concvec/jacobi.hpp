#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "concvec/state.hpp"

namespace concvec {

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a real symmetric n × n matrix (row-major) by cyclic
/// Jacobi rotations, ascending. Iterates until the off-diagonal Frobenius
/// norm drops below the tolerance; throws std::runtime_error if the sweep
/// cap is hit first.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n,
                                          const JacobiOptions& opts = {});

/// Eigenvalues of a Hermitian n × n matrix (row-major), ascending.
/// Works on the real symmetric embedding [[X, -Y], [Y, X]] of A = X + iY,
/// whose spectrum is that of A with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(std::span<const Complex> a, std::size_t n,
                                          const JacobiOptions& opts = {});

}  // namespace concvec
