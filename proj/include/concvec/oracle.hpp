#pragma once

#include <cstddef>
#include <vector>

#include "concvec/state.hpp"

namespace concvec::oracle {

/// Largest Π dims the dense oracle accepts (D × D ≤ 65 536 entries).
inline constexpr std::size_t kMaxDimension = 256;

/// Dense row-major square matrix over the full Hilbert space. Rows and
/// columns use the flatten() ordering of the state's dims.
struct DenseMatrix {
  std::size_t size = 0;
  std::vector<Complex> entries;

  Complex& operator()(std::size_t r, std::size_t c) { return entries[r * size + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
  Complex trace() const;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
/// Kronecker product, (A ⊗ B)_{(a,b),(c,d)} = A_{ac} B_{bd}.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

struct DensityMatrix {
  Dims dims;
  DenseMatrix matrix;
};

/// ρ = |ψ⟩⟨ψ|.
DensityMatrix density_of(const PureState& psi);

/// Transposes the i and j tensor factors of ρ: the entry at (x, y) is read
/// from ρ at x and y with their i, j components exchanged.
DensityMatrix partial_transpose_pair(const DensityMatrix& rho, std::size_t i, std::size_t j);

/// I ⊗ … ⊗ L_{α_i} ⊗ … ⊗ L_{α_j} ⊗ … ⊗ I, assembled by Kronecker products.
DenseMatrix m_operator(const Dims& dims, std::size_t i, std::size_t j,
                       std::size_t alpha_i, std::size_t alpha_j);

/// √⟨ψ| M ρ^{T_ij} M |ψ⟩ by dense matrix algebra. Throws std::logic_error if
/// the expectation is not real and nonnegative within 1e-10.
double definitional_component(const PureState& psi, std::size_t i, std::size_t j,
                              std::size_t alpha_i, std::size_t alpha_j);

}  // namespace concvec::oracle
