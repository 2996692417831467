#include "concvec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "concvec/son_algebra.hpp"

namespace concvec::oracle {

namespace {

void require_scale(const Dims& dims) {
  validate_dims(dims);
  if (total_dimension(dims) > kMaxDimension) {
    throw std::invalid_argument("oracle: total dimension " +
                                std::to_string(total_dimension(dims)) +
                                " exceeds the limit of " + std::to_string(kMaxDimension));
  }
}

void require_pair(const Dims& dims, std::size_t i, std::size_t j) {
  if (!(i < j && j < dims.size())) {
    throw std::invalid_argument("oracle: invalid pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  }
}

DenseMatrix identity(std::size_t n) {
  DenseMatrix m{n, std::vector<Complex>(n * n)};
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

DenseMatrix from_generator(const SonGenerator& g) {
  const auto ints = dense_matrix(g);
  DenseMatrix m{g.n, std::vector<Complex>(ints.size())};
  for (std::size_t k = 0; k < ints.size(); ++k) m.entries[k] = static_cast<double>(ints[k]);
  return m;
}

}  // namespace

Complex DenseMatrix::trace() const {
  Complex t{};
  for (std::size_t k = 0; k < size; ++k) t += (*this)(k, k);
  return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size != b.size) throw std::invalid_argument("multiply: shape mismatch");
  const std::size_t n = a.size;
  DenseMatrix c{n, std::vector<Complex>(n * n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t col = 0; col < n; ++col) c(r, col) += ark * b(k, col);
    }
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t{a.size, std::vector<Complex>(a.entries.size())};
  for (std::size_t r = 0; r < a.size; ++r) {
    for (std::size_t c = 0; c < a.size; ++c) t(c, r) = a(r, c);
  }
  return t;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size * b.size;
  DenseMatrix out{n, std::vector<Complex>(n * n)};
  for (std::size_t ar = 0; ar < a.size; ++ar) {
    for (std::size_t ac = 0; ac < a.size; ++ac) {
      for (std::size_t br = 0; br < b.size; ++br) {
        for (std::size_t bc = 0; bc < b.size; ++bc) {
          out(ar * b.size + br, ac * b.size + bc) = a(ar, ac) * b(br, bc);
        }
      }
    }
  }
  return out;
}

DensityMatrix density_of(const PureState& psi) {
  require_scale(psi.dims());
  const std::size_t d = psi.size();
  DensityMatrix rho{psi.dims(), {d, std::vector<Complex>(d * d)}};
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) rho.matrix(r, c) = psi[r] * std::conj(psi[c]);
  }
  return rho;
}

DensityMatrix partial_transpose_pair(const DensityMatrix& rho, std::size_t i, std::size_t j) {
  require_scale(rho.dims);
  require_pair(rho.dims, i, j);
  const std::size_t d = rho.matrix.size;
  DensityMatrix out{rho.dims, {d, std::vector<Complex>(d * d)}};
  for (std::size_t x = 0; x < d; ++x) {
    const MultiIndex xi = unflatten(rho.dims, x);
    for (std::size_t y = 0; y < d; ++y) {
      const MultiIndex yi = unflatten(rho.dims, y);
      MultiIndex xs = xi;
      MultiIndex ys = yi;
      xs[i] = yi[i];
      xs[j] = yi[j];
      ys[i] = xi[i];
      ys[j] = xi[j];
      out.matrix(x, y) = rho.matrix(flatten(rho.dims, xs), flatten(rho.dims, ys));
    }
  }
  return out;
}

DenseMatrix m_operator(const Dims& dims, std::size_t i, std::size_t j,
                       std::size_t alpha_i, std::size_t alpha_j) {
  require_scale(dims);
  require_pair(dims, i, j);
  const auto gens_i = enumerate_generators(dims[i]);
  const auto gens_j = enumerate_generators(dims[j]);
  if (alpha_i >= gens_i.size() || alpha_j >= gens_j.size()) {
    throw std::invalid_argument("m_operator: generator index out of range");
  }
  DenseMatrix m = identity(1);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k == i) {
      m = kron(m, from_generator(gens_i[alpha_i]));
    } else if (k == j) {
      m = kron(m, from_generator(gens_j[alpha_j]));
    } else {
      m = kron(m, identity(dims[k]));
    }
  }
  return m;
}

double definitional_component(const PureState& psi, std::size_t i, std::size_t j,
                              std::size_t alpha_i, std::size_t alpha_j) {
  const DensityMatrix rho = density_of(psi);
  const DensityMatrix rho_t = partial_transpose_pair(rho, i, j);
  const DenseMatrix m = m_operator(psi.dims(), i, j, alpha_i, alpha_j);
  const DenseMatrix sandwich = multiply(m, multiply(rho_t.matrix, m));

  Complex expectation{};
  for (std::size_t r = 0; r < sandwich.size; ++r) {
    Complex row{};
    for (std::size_t c = 0; c < sandwich.size; ++c) row += sandwich(r, c) * psi[c];
    expectation += std::conj(psi[r]) * row;
  }
  if (std::abs(expectation.imag()) > 1e-10 || expectation.real() < -1e-10) {
    throw std::logic_error("definitional_component: expectation " +
                           std::to_string(expectation.real()) + " + " +
                           std::to_string(expectation.imag()) +
                           "i is not real and nonnegative");
  }
  return std::sqrt(std::max(expectation.real(), 0.0));
}

}  // namespace concvec::oracle
