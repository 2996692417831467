#include "concvec/son_algebra.hpp"

#include <stdexcept>
#include <string>

namespace concvec {

int levi_civita(std::span<const std::size_t> indices) {
  const std::size_t n = indices.size();
  std::vector<std::size_t> perm(indices.begin(), indices.end());
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) return 0;
    seen[v] = true;
  }
  // Sort by swapping each element into place; every swap flips the sign.
  int sign = 1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    while (perm[pos] != pos) {
      std::swap(perm[pos], perm[perm[pos]]);
      sign = -sign;
    }
  }
  return sign;
}

int generator_sign(std::size_t n, std::size_t k, std::size_t l) {
  if (!(k < l && l < n)) {
    throw std::invalid_argument("generator_sign: need 0 <= k < l < n, got k=" +
                                std::to_string(k) + " l=" + std::to_string(l) +
                                " n=" + std::to_string(n));
  }
  // (complement, k, l) has n-2-k inversions ending at k and n-1-l ending at l.
  return ((k + l + 1) % 2 == 0) ? 1 : -1;
}

std::size_t generator_count(std::size_t n) { return n * (n - 1) / 2; }

std::vector<SonGenerator> enumerate_generators(std::size_t n) {
  if (n < 2) throw std::invalid_argument("enumerate_generators: n must be >= 2");
  std::vector<SonGenerator> out;
  out.reserve(generator_count(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      out.push_back({n, k, l, generator_sign(n, k, l)});
    }
  }
  return out;
}

std::vector<int> dense_matrix(const SonGenerator& g) {
  std::vector<int> m(g.n * g.n, 0);
  m[g.k * g.n + g.l] = g.sign;
  m[g.l * g.n + g.k] = -g.sign;
  return m;
}

PureState apply_generator_axis(const PureState& psi, std::size_t axis,
                               const SonGenerator& g) {
  if (axis >= psi.subsystems()) {
    throw std::out_of_range("apply_generator_axis: axis out of range");
  }
  if (g.n != psi.dims()[axis]) {
    throw std::invalid_argument("apply_generator_axis: generator of SO(" +
                                std::to_string(g.n) + ") on subsystem of dimension " +
                                std::to_string(psi.dims()[axis]));
  }
  const std::size_t stride = strides(psi.dims())[axis];
  const std::size_t block = stride * g.n;
  const double s = g.sign;
  std::vector<Complex> out(psi.size());
  for (std::size_t outer = 0; outer < psi.size(); outer += block) {
    for (std::size_t r = 0; r < stride; ++r) {
      const std::size_t at_k = outer + g.k * stride + r;
      const std::size_t at_l = outer + g.l * stride + r;
      out[at_k] = s * psi[at_l];
      out[at_l] = -s * psi[at_k];
    }
  }
  return PureState::unnormalized(psi.dims(), std::move(out));
}

}  // namespace concvec
