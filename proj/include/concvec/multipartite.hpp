#pragma once

#include <cstddef>
#include <vector>

#include "concvec/state.hpp"

namespace concvec::multipartite {

/// Block C^{ij} of the concurrence vector for the particle pair (i, j).
/// components(α_i, α_j) are nonnegative; rows run over SO(N_i) generators,
/// columns over SO(N_j) generators.
struct PairwiseSubvector {
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> components;
  double norm = 0.0;

  double at(std::size_t alpha_i, std::size_t alpha_j) const {
    return components[alpha_i * cols + alpha_j];
  }
};

struct PairNorm {
  std::size_t i = 0;
  std::size_t j = 1;
  double norm = 0.0;
};

struct ConcurrenceReport {
  Dims dims;
  std::vector<PairNorm> pairs;  // lexicographic in (i, j)
  double total = 0.0;
};

enum class Separability { separable_certified, entangled, inconclusive };

const char* to_string(Separability s) noexcept;

/// C^{ij}_{α_i α_j} = √(Σ_{K,L} |G(K,L)|²), where K and L run over the
/// spectator indices and, for the generators (k_i, l_i, σ_i), (k_j, l_j, σ_j),
///
///   G(K,L) = σ_i σ_j ( a[k_i k_j K] a[l_i l_j L] − a[k_i l_j K] a[l_i k_j L]
///                    − a[l_i k_j K] a[k_i l_j L] + a[l_i l_j K] a[k_i k_j L] ).
///
/// This equals √⟨ψ| M ρ^{T_ij} M |ψ⟩ with M = L_{α_i} ⊗ L_{α_j} on the pair.
/// Generator indices follow enumerate_generators order.
double pairwise_component(const PureState& psi, std::size_t i, std::size_t j,
                          std::size_t alpha_i, std::size_t alpha_j);

PairwiseSubvector pairwise_subvector(const PureState& psi, std::size_t i, std::size_t j);

/// |C^{ij}|. Cost O(N_i² N_j² D_rest²), D_rest = product of spectator dims.
double pairwise_norm(const PureState& psi, std::size_t i, std::size_t j);

/// All pairwise norms and C = √(Σ_{i<j} |C^{ij}|²).
ConcurrenceReport total_concurrence(const PureState& psi);

/// Two parties: total < tol certifies separability. Three or more parties:
/// a vanishing total is necessary but not sufficient, so it is reported as
/// inconclusive.
Separability separability_flag(const PureState& psi, double tol = 1e-10);

/// Same rule applied to an already computed report.
Separability classify(const ConcurrenceReport& report, double tol = 1e-10);

}  // namespace concvec::multipartite
