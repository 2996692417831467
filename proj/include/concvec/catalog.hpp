#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "concvec/state.hpp"

namespace concvec::catalog {

/// (|0…0⟩ + |1…1⟩)/√2 on m qubits.
PureState ghz(std::size_t m);

/// Equal superposition of the m-qubit basis kets with exactly one 0,
/// e.g. (|110⟩ + |101⟩ + |011⟩)/√3 for m = 3.
PureState w(std::size_t m);

/// Equal superposition of the m-qubit basis kets with exactly one 1,
/// e.g. (|001⟩ + |010⟩ + |100⟩)/√3 for m = 3.
PureState anti_w(std::size_t m);

/// (|00⟩ + |11⟩)/√2 ⊗ (alpha|0⟩ + beta|1⟩); |alpha|² + |beta|² must be 1.
PureState epr_times_single(Complex alpha, Complex beta);

/// √s |W₃⟩ + √(1−s) e^{iφ} |W̃₃⟩.
PureState ww_superposition(double s, double phi);

/// √s |GHZ₃⟩ + √(1−s) e^{iφ} |W₃⟩.
PureState gw_superposition(double s, double phi);

/// Σ_k |kk⟩/√n on n ⊗ n.
PureState maximally_entangled(std::size_t n);

/// Tensor product of single-subsystem states, each given as a list of
/// amplitudes (normalized internally).
PureState product(const std::vector<std::vector<Complex>>& factors);

struct Params {
  std::size_t m = 3;
  double s = 0.5;
  double phi = 0.0;
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  std::size_t n = 2;
  std::vector<std::vector<Complex>> factors;
};

/// Dispatch by family name: ghz, w, anti_w, epr1, ww, gw, maxent, product.
/// Throws std::invalid_argument for unknown families or bad parameters.
PureState make(std::string_view family, const Params& params);

}  // namespace concvec::catalog
