#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace concvec {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

/// Tolerance on Σ|a|² when a state is accepted as already normalized.
inline constexpr double kNormTolerance = 1e-8;

/// Dense pure state of an m-partite system with subsystem dimensions
/// N_1..N_m. Amplitudes are stored row-major: the last subsystem index
/// varies fastest.
///
/// Instances built through make_state / from_amplitudes are normalized.
/// PureState::unnormalized exists for intermediate vectors such as the
/// image of a state under a generator.
class PureState {
 public:
  static PureState from_amplitudes(Dims dims, std::vector<Complex> amps,
                                   bool normalize = false);
  static PureState unnormalized(Dims dims, std::vector<Complex> amps);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  const Complex& operator[](std::size_t offset) const { return amps_[offset]; }
  const Complex& at(const MultiIndex& index) const;

  double norm() const;

 private:
  PureState(Dims dims, std::vector<Complex> amps)
      : dims_(std::move(dims)), amps_(std::move(amps)) {}

  Dims dims_;
  std::vector<Complex> amps_;
};

/// Throws std::invalid_argument unless dims is non-empty and every entry ≥ 2.
void validate_dims(const Dims& dims);

/// Π dims.
std::size_t total_dimension(const Dims& dims);

/// Row-major strides; stride of the last subsystem is 1.
std::vector<std::size_t> strides(const Dims& dims);

std::size_t flatten(const Dims& dims, const MultiIndex& index);
MultiIndex unflatten(const Dims& dims, std::size_t offset);

struct Amplitude {
  MultiIndex index;
  Complex value;
};

/// Builds a dense state from sparse entries. Unlisted amplitudes are zero.
/// With normalize off the entries must already have unit norm within
/// kNormTolerance; the stored vector is rescaled by the exact norm either way.
PureState make_state(const Dims& dims, const std::vector<Amplitude>& entries,
                     bool normalize);

PureState conjugate(const PureState& psi);

/// ⟨psi|phi⟩ = Σ conj(psi_x) phi_x.
Complex inner(const PureState& psi, const PureState& phi);

/// Haar-random pure state: independent standard complex Gaussians from a
/// seeded mt19937_64, then normalized.
PureState random_state(const Dims& dims, std::uint64_t seed);

/// |a⟩ ⊗ |b⟩, subsystems of a first.
PureState tensor_product(const PureState& a, const PureState& b);

/// Reorders subsystems: subsystem k of the result is subsystem order[k] of
/// psi.
PureState permute_subsystems(const PureState& psi,
                             const std::vector<std::size_t>& order);

/// Applies a dense operator (row-major, N_axis × N_axis) to one subsystem,
/// identity on the others. The result is not renormalized.
PureState apply_local(const PureState& psi, std::size_t axis,
                      std::span<const Complex> op);

}  // namespace concvec
