#include "concvec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace concvec {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) sum += a[p * n + q] * a[p * n + q];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n,
                                          const JacobiOptions& opts) {
  if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: shape mismatch");
  int sweep = 0;
  while (off_diagonal_norm(a, n) >= opts.off_diagonal_tolerance) {
    if (sweep++ >= opts.max_sweeps) {
      throw std::runtime_error("symmetric_eigenvalues: no convergence");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle that annihilates a_pq (Golub & Van Loan, 8.5.2).
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r];
          const double aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t p = 0; p < n; ++p) eig[p] = a[p * n + p];
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(std::span<const Complex> a, std::size_t n,
                                          const JacobiOptions& opts) {
  if (a.size() != n * n) throw std::invalid_argument("hermitian_eigenvalues: shape mismatch");
  const std::size_t n2 = 2 * n;
  std::vector<double> embed(n2 * n2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double x = a[r * n + c].real();
      const double y = a[r * n + c].imag();
      embed[r * n2 + c] = x;
      embed[r * n2 + (c + n)] = -y;
      embed[(r + n) * n2 + c] = y;
      embed[(r + n) * n2 + (c + n)] = x;
    }
  }
  const auto doubled = symmetric_eigenvalues(std::move(embed), n2, opts);
  std::vector<double> eig(n);
  for (std::size_t p = 0; p < n; ++p) eig[p] = 0.5 * (doubled[2 * p] + doubled[2 * p + 1]);
  return eig;
}

}  // namespace concvec
