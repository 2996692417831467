#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "concvec/state.hpp"

namespace concvec {

/// One generator of SO(n) in the defining representation, stored sparsely.
///
/// The matrix has entry(k, l) = sign and entry(l, k) = -sign and is zero
/// elsewhere. The sign is the Levi-Civita value ε_{[c] k l}, where [c] is the
/// sorted complement of {k, l} in {0, …, n-1} and ε_{0 1 … n-1} = +1. Indices
/// are 0-based with k < l.
struct SonGenerator {
  std::size_t n = 2;
  std::size_t k = 0;
  std::size_t l = 1;
  int sign = 1;

  int entry(std::size_t row, std::size_t col) const noexcept {
    if (row == k && col == l) return sign;
    if (row == l && col == k) return -sign;
    return 0;
  }

  friend bool operator==(const SonGenerator&, const SonGenerator&) = default;
};

/// Totally antisymmetric symbol on a sequence of indices drawn from
/// {0, …, size-1}: 0 if any index repeats or is out of range, otherwise the
/// parity of the permutation.
int levi_civita(std::span<const std::size_t> indices);

/// ε_{[complement] k l}; equal to (-1)^{k+l+1}.
int generator_sign(std::size_t n, std::size_t k, std::size_t l);

/// n(n-1)/2.
std::size_t generator_count(std::size_t n);

/// All generators of SO(n), lexicographic in (k, l).
std::vector<SonGenerator> enumerate_generators(std::size_t n);

/// Row-major n × n integer matrix of g. Used by the dense oracle only.
std::vector<int> dense_matrix(const SonGenerator& g);

/// (I ⊗ … ⊗ L ⊗ … ⊗ I)|psi⟩ with L on `axis`. Column action:
/// (L x)_a = Σ_b L_{ab} x_b. Touches only the k and l slices of the axis.
PureState apply_generator_axis(const PureState& psi, std::size_t axis,
                               const SonGenerator& g);

}  // namespace concvec
