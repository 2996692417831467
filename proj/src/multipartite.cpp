#include "concvec/multipartite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "concvec/son_algebra.hpp"

namespace concvec::multipartite {

namespace {

// Addressing of a[u_i, u_j, K]: offset = spectator_base[K] + u_i*stride_i + u_j*stride_j.
struct PairLayout {
  std::size_t stride_i = 0;
  std::size_t stride_j = 0;
  std::vector<std::size_t> spectator_base;
};

void require_pair(const PureState& psi, std::size_t i, std::size_t j) {
  if (psi.subsystems() < 2) {
    throw std::invalid_argument("pairwise concurrence needs at least 2 subsystems");
  }
  if (!(i < j && j < psi.subsystems())) {
    throw std::invalid_argument("invalid pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") for " +
                                std::to_string(psi.subsystems()) + " subsystems");
  }
}

PairLayout layout_for(const Dims& dims, std::size_t i, std::size_t j) {
  const auto st = strides(dims);
  PairLayout layout{st[i], st[j], {}};
  std::size_t rest = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k != i && k != j) rest *= dims[k];
  }
  layout.spectator_base.reserve(rest);
  // Odometer over the spectator axes in row-major order.
  MultiIndex idx(dims.size(), 0);
  for (std::size_t r = 0; r < rest; ++r) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) offset += idx[k] * st[k];
    layout.spectator_base.push_back(offset);
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (k == i || k == j) continue;
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return layout;
}

double component_squared(const PureState& psi, const PairLayout& layout,
                         const SonGenerator& gi, const SonGenerator& gj) {
  const std::size_t kk = gi.k * layout.stride_i + gj.k * layout.stride_j;
  const std::size_t kl = gi.k * layout.stride_i + gj.l * layout.stride_j;
  const std::size_t lk = gi.l * layout.stride_i + gj.k * layout.stride_j;
  const std::size_t ll = gi.l * layout.stride_i + gj.l * layout.stride_j;
  const double sign = gi.sign * gj.sign;
  double sum = 0.0;
  for (const std::size_t x : layout.spectator_base) {
    for (const std::size_t y : layout.spectator_base) {
#ifdef CONCVEC_FAULT_FLIP_SIGN
      // Deliberately wrong kernel for the verification negative control.
      const Complex g = psi[x + kk] * psi[y + ll] + psi[x + kl] * psi[y + lk] -
                        psi[x + lk] * psi[y + kl] + psi[x + ll] * psi[y + kk];
#else
      const Complex g = psi[x + kk] * psi[y + ll] - psi[x + kl] * psi[y + lk] -
                        psi[x + lk] * psi[y + kl] + psi[x + ll] * psi[y + kk];
#endif
      sum += std::norm(sign * g);
    }
  }
  return sum;
}

}  // namespace

const char* to_string(Separability s) noexcept {
  switch (s) {
    case Separability::separable_certified: return "separable-certified";
    case Separability::entangled: return "entangled";
    case Separability::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double pairwise_component(const PureState& psi, std::size_t i, std::size_t j,
                          std::size_t alpha_i, std::size_t alpha_j) {
  require_pair(psi, i, j);
  const auto gens_i = enumerate_generators(psi.dims()[i]);
  const auto gens_j = enumerate_generators(psi.dims()[j]);
  if (alpha_i >= gens_i.size() || alpha_j >= gens_j.size()) {
    throw std::invalid_argument("generator index out of range");
  }
  const PairLayout layout = layout_for(psi.dims(), i, j);
  return std::sqrt(component_squared(psi, layout, gens_i[alpha_i], gens_j[alpha_j]));
}

PairwiseSubvector pairwise_subvector(const PureState& psi, std::size_t i, std::size_t j) {
  require_pair(psi, i, j);
  const auto gens_i = enumerate_generators(psi.dims()[i]);
  const auto gens_j = enumerate_generators(psi.dims()[j]);
  const PairLayout layout = layout_for(psi.dims(), i, j);

  PairwiseSubvector out{i, j, gens_i.size(), gens_j.size(), {}, 0.0};
  out.components.reserve(out.rows * out.cols);
  double norm2 = 0.0;
  for (const auto& gi : gens_i) {
    for (const auto& gj : gens_j) {
      const double c2 = component_squared(psi, layout, gi, gj);
      norm2 += c2;
      out.components.push_back(std::sqrt(c2));
    }
  }
  out.norm = std::sqrt(norm2);
  return out;
}

double pairwise_norm(const PureState& psi, std::size_t i, std::size_t j) {
  return pairwise_subvector(psi, i, j).norm;
}

ConcurrenceReport total_concurrence(const PureState& psi) {
  if (psi.subsystems() < 2) {
    throw std::invalid_argument("total_concurrence needs at least 2 subsystems");
  }
  ConcurrenceReport report{psi.dims(), {}, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < psi.subsystems(); ++i) {
    for (std::size_t j = i + 1; j < psi.subsystems(); ++j) {
      const double c = pairwise_norm(psi, i, j);
      report.pairs.push_back({i, j, c});
      sum += c * c;
    }
  }
  report.total = std::sqrt(sum);
  return report;
}

Separability classify(const ConcurrenceReport& report, double tol) {
  if (report.total >= tol) return Separability::entangled;
  return report.dims.size() == 2 ? Separability::separable_certified
                                 : Separability::inconclusive;
}

Separability separability_flag(const PureState& psi, double tol) {
  return classify(total_concurrence(psi), tol);
}

}  // namespace concvec::multipartite
