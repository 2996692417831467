#include "concvec/state.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace concvec {

namespace {

bool all_finite(std::span<const Complex> amps) {
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

double euclidean_norm(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return std::sqrt(sum);
}

}  // namespace

void validate_dims(const Dims& dims) {
  if (dims.empty()) throw std::invalid_argument("dims: at least one subsystem required");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 2) {
      throw std::invalid_argument("dims: subsystem " + std::to_string(k) +
                                  " has dimension " + std::to_string(dims[k]) +
                                  " (must be >= 2)");
    }
  }
}

std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>{});
}

std::vector<std::size_t> strides(const Dims& dims) {
  std::vector<std::size_t> out(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) out[k - 1] = out[k] * dims[k];
  return out;
}

std::size_t flatten(const Dims& dims, const MultiIndex& index) {
  if (index.size() != dims.size()) {
    throw std::out_of_range("flatten: index arity " + std::to_string(index.size()) +
                            " does not match " + std::to_string(dims.size()) +
                            " subsystems");
  }
  std::size_t offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (index[k] >= dims[k]) {
      throw std::out_of_range("flatten: component " + std::to_string(k) + " = " +
                              std::to_string(index[k]) + " out of range [0, " +
                              std::to_string(dims[k]) + ")");
    }
    offset = offset * dims[k] + index[k];
  }
  return offset;
}

MultiIndex unflatten(const Dims& dims, std::size_t offset) {
  if (offset >= total_dimension(dims)) {
    throw std::out_of_range("unflatten: offset " + std::to_string(offset) +
                            " out of range");
  }
  MultiIndex index(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    index[k] = offset % dims[k];
    offset /= dims[k];
  }
  return index;
}

PureState PureState::from_amplitudes(Dims dims, std::vector<Complex> amps,
                                     bool normalize) {
  validate_dims(dims);
  if (amps.size() != total_dimension(dims)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amps.size()) +
                                " does not match dimension " +
                                std::to_string(total_dimension(dims)));
  }
  if (!all_finite(amps)) throw std::invalid_argument("non-finite amplitude");
  const double norm = euclidean_norm(amps);
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  if (!normalize && std::abs(norm * norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (sum |a|^2 = " +
                                std::to_string(norm * norm) + ")");
  }
  for (auto& a : amps) a /= norm;
  return PureState(std::move(dims), std::move(amps));
}

PureState PureState::unnormalized(Dims dims, std::vector<Complex> amps) {
  validate_dims(dims);
  if (amps.size() != total_dimension(dims)) {
    throw std::invalid_argument("amplitude count does not match dimension");
  }
  return PureState(std::move(dims), std::move(amps));
}

const Complex& PureState::at(const MultiIndex& index) const {
  return amps_[flatten(dims_, index)];
}

double PureState::norm() const { return euclidean_norm(amps_); }

PureState make_state(const Dims& dims, const std::vector<Amplitude>& entries,
                     bool normalize) {
  validate_dims(dims);
  std::vector<Complex> amps(total_dimension(dims));
  std::vector<bool> seen(amps.size(), false);
  for (const auto& e : entries) {
    const std::size_t offset = flatten(dims, e.index);
    if (seen[offset]) {
      std::string idx;
      for (auto v : e.index) idx += (idx.empty() ? "" : ",") + std::to_string(v);
      throw std::invalid_argument("duplicate amplitude index [" + idx + "]");
    }
    seen[offset] = true;
    amps[offset] = e.value;
  }
  return PureState::from_amplitudes(dims, std::move(amps), normalize);
}

PureState conjugate(const PureState& psi) {
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& a : amps) a = std::conj(a);
  return PureState::unnormalized(psi.dims(), std::move(amps));
}

Complex inner(const PureState& psi, const PureState& phi) {
  if (psi.dims() != phi.dims()) throw std::invalid_argument("inner: dimension mismatch");
  Complex sum{};
  for (std::size_t x = 0; x < psi.size(); ++x) sum += std::conj(psi[x]) * phi[x];
  return sum;
}

PureState random_state(const Dims& dims, std::uint64_t seed) {
  validate_dims(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(total_dimension(dims));
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex(re, im);
  }
  return PureState::from_amplitudes(dims, std::move(amps), true);
}

PureState tensor_product(const PureState& a, const PureState& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps;
  amps.reserve(a.size() * b.size());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return PureState::unnormalized(std::move(dims), std::move(amps));
}

PureState permute_subsystems(const PureState& psi,
                             const std::vector<std::size_t>& order) {
  const std::size_t m = psi.subsystems();
  if (order.size() != m) throw std::invalid_argument("permute_subsystems: wrong arity");
  std::vector<bool> used(m, false);
  for (auto k : order) {
    if (k >= m || used[k]) throw std::invalid_argument("permute_subsystems: not a permutation");
    used[k] = true;
  }
  Dims dims(m);
  for (std::size_t k = 0; k < m; ++k) dims[k] = psi.dims()[order[k]];
  std::vector<Complex> amps(psi.size());
  MultiIndex src(m);
  for (std::size_t y = 0; y < amps.size(); ++y) {
    const MultiIndex dst = unflatten(dims, y);
    for (std::size_t k = 0; k < m; ++k) src[order[k]] = dst[k];
    amps[y] = psi.at(src);
  }
  return PureState::unnormalized(std::move(dims), std::move(amps));
}

PureState apply_local(const PureState& psi, std::size_t axis,
                      std::span<const Complex> op) {
  if (axis >= psi.subsystems()) throw std::out_of_range("apply_local: axis out of range");
  const std::size_t n = psi.dims()[axis];
  if (op.size() != n * n) throw std::invalid_argument("apply_local: operator shape mismatch");
  const std::size_t stride = strides(psi.dims())[axis];
  const std::size_t block = stride * n;
  std::vector<Complex> out(psi.size());
  for (std::size_t outer = 0; outer < psi.size(); outer += block) {
    for (std::size_t inner_off = 0; inner_off < stride; ++inner_off) {
      const std::size_t base = outer + inner_off;
      for (std::size_t r = 0; r < n; ++r) {
        Complex sum{};
        for (std::size_t c = 0; c < n; ++c) sum += op[r * n + c] * psi[base + c * stride];
        out[base + r * stride] = sum;
      }
    }
  }
  return PureState::unnormalized(psi.dims(), std::move(out));
}

}  // namespace concvec
