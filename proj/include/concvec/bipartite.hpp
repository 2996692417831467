#pragma once

#include <cstddef>
#include <vector>

#include "concvec/state.hpp"

namespace concvec::bipartite {

/// Components C_{αβ} = ⟨ψ|(L_α ⊗ L_β)|ψ*⟩ of a two-party pure state.
/// Rows run over SO(N1) generators, columns over SO(N2) generators, both in
/// enumerate_generators order.
struct ConcurrenceVector {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> components;

  const Complex& at(std::size_t alpha, std::size_t beta) const {
    return components[alpha * cols + beta];
  }
  double norm() const;
};

/// Reduced density matrix of one party, row-major n × n.
struct ReducedDensity {
  std::size_t n = 0;
  std::vector<Complex> entries;

  const Complex& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  Complex trace() const;
  /// Tr ρ² = Σ |ρ_{ab}|² (ρ Hermitian).
  double purity() const;
};

enum class Side { first, second };

ConcurrenceVector concurrence_vector(const PureState& psi);

/// |C|, the Euclidean norm of concurrence_vector.
double concurrence_norm(const PureState& psi);

/// 2 √(Σ_{i<j} Σ_{k<l} |a_ik a_jl − a_il a_jk|²).
double concurrence_closed_form(const PureState& psi);

ReducedDensity reduced_density(const PureState& psi, Side side);

/// √(2 (1 − Tr ρ_A²)).
double i_concurrence(const PureState& psi);

/// √(N/(N−1) (1 − Tr ρ_A²)) with N = min(N1, N2).
double fei_concurrence(const PureState& psi);

/// 2 |a_00 a_11 − a_01 a_10| for a two-qubit state.
double wootters_two_qubit(const PureState& psi);

/// −x log2 x − (1−x) log2 (1−x), with 0 log 0 = 0.
double binary_entropy(double x);

/// −Σ λ log2 λ over the spectrum of the smaller reduced density matrix.
double von_neumann_entropy(const PureState& psi);

/// H(½ + ½√(1 − C²)) in bits with C = concurrence_norm. Only defined when
/// one party is a qubit; throws std::invalid_argument otherwise.
double eof(const PureState& psi);

}  // namespace concvec::bipartite
