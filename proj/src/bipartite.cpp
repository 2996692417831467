#include "concvec/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "concvec/jacobi.hpp"
#include "concvec/son_algebra.hpp"

namespace concvec::bipartite {

namespace {

void require_two_parties(const PureState& psi, const char* op) {
  if (psi.subsystems() != 2) {
    throw std::invalid_argument(std::string(op) + ": expected 2 subsystems, got " +
                                std::to_string(psi.subsystems()));
  }
}

}  // namespace

double ConcurrenceVector::norm() const {
  double sum = 0.0;
  for (const auto& c : components) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex ReducedDensity::trace() const {
  Complex t{};
  for (std::size_t a = 0; a < n; ++a) t += at(a, a);
  return t;
}

double ReducedDensity::purity() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += std::norm(e);
  return sum;
}

ConcurrenceVector concurrence_vector(const PureState& psi) {
  require_two_parties(psi, "concurrence_vector");
  const auto gens1 = enumerate_generators(psi.dims()[0]);
  const auto gens2 = enumerate_generators(psi.dims()[1]);
  const PureState psi_conj = conjugate(psi);

  ConcurrenceVector out;
  out.n1 = psi.dims()[0];
  out.n2 = psi.dims()[1];
  out.rows = gens1.size();
  out.cols = gens2.size();
  out.components.reserve(out.rows * out.cols);
  for (const auto& ga : gens1) {
    const PureState first = apply_generator_axis(psi_conj, 0, ga);
    for (const auto& gb : gens2) {
      out.components.push_back(inner(psi, apply_generator_axis(first, 1, gb)));
    }
  }
  return out;
}

double concurrence_norm(const PureState& psi) { return concurrence_vector(psi).norm(); }

double concurrence_closed_form(const PureState& psi) {
  require_two_parties(psi, "concurrence_closed_form");
  const std::size_t n1 = psi.dims()[0];
  const std::size_t n2 = psi.dims()[1];
  auto a = [&](std::size_t i, std::size_t k) { return psi[i * n2 + k]; };
  double sum = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      for (std::size_t k = 0; k < n2; ++k) {
        for (std::size_t l = k + 1; l < n2; ++l) {
          sum += std::norm(a(i, k) * a(j, l) - a(i, l) * a(j, k));
        }
      }
    }
  }
  return 2.0 * std::sqrt(sum);
}

ReducedDensity reduced_density(const PureState& psi, Side side) {
  require_two_parties(psi, "reduced_density");
  const std::size_t n1 = psi.dims()[0];
  const std::size_t n2 = psi.dims()[1];
  ReducedDensity rho;
  if (side == Side::first) {
    rho.n = n1;
    rho.entries.assign(n1 * n1, Complex{});
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t ip = 0; ip < n1; ++ip) {
        Complex sum{};
        for (std::size_t k = 0; k < n2; ++k) sum += psi[i * n2 + k] * std::conj(psi[ip * n2 + k]);
        rho.entries[i * n1 + ip] = sum;
      }
    }
  } else {
    rho.n = n2;
    rho.entries.assign(n2 * n2, Complex{});
    for (std::size_t k = 0; k < n2; ++k) {
      for (std::size_t kp = 0; kp < n2; ++kp) {
        Complex sum{};
        for (std::size_t i = 0; i < n1; ++i) sum += psi[i * n2 + k] * std::conj(psi[i * n2 + kp]);
        rho.entries[k * n2 + kp] = sum;
      }
    }
  }
  return rho;
}

double i_concurrence(const PureState& psi) {
  const double purity = reduced_density(psi, Side::first).purity();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double fei_concurrence(const PureState& psi) {
  const double purity = reduced_density(psi, Side::first).purity();
  const double n = static_cast<double>(std::min(psi.dims()[0], psi.dims()[1]));
  return std::sqrt(std::max(0.0, n / (n - 1.0) * (1.0 - purity)));
}

double wootters_two_qubit(const PureState& psi) {
  if (psi.dims() != Dims{2, 2}) {
    throw std::invalid_argument("wootters_two_qubit: dims must be [2, 2]");
  }
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

double binary_entropy(double x) {
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(x) + term(1.0 - x);
}

double von_neumann_entropy(const PureState& psi) {
  require_two_parties(psi, "von_neumann_entropy");
  const Side side = psi.dims()[0] <= psi.dims()[1] ? Side::first : Side::second;
  const ReducedDensity rho = reduced_density(psi, side);
  double entropy = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.entries, rho.n)) {
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double eof(const PureState& psi) {
  require_two_parties(psi, "eof");
  if (std::min(psi.dims()[0], psi.dims()[1]) != 2) {
    throw std::invalid_argument("eof: requires one party to be a qubit");
  }
  const double c = std::min(concurrence_norm(psi), 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

}  // namespace concvec::bipartite
