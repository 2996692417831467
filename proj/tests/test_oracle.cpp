#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "concvec/catalog.hpp"
#include "concvec/oracle.hpp"
#include "concvec/son_algebra.hpp"

using namespace concvec;
using namespace concvec::oracle;

namespace {

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    worst = std::max(worst, std::abs(a.entries[k] - b.entries[k]));
  }
  return worst;
}

bool hermitian(const DenseMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.size; ++r)
    for (std::size_t c = 0; c < m.size; ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("density_of") {
  const PureState k0 = make_state({2}, {{{0}, 1.0}}, false);
  const auto rho0 = density_of(k0);
  CHECK(rho0.matrix(0, 0) == Complex(1.0));
  CHECK(rho0.matrix(0, 1) == Complex{});
  CHECK(rho0.matrix(1, 1) == Complex{});

  const auto bell = density_of(catalog::maximally_entangled(2));
  for (std::size_t r : {0u, 3u})
    for (std::size_t c : {0u, 3u}) CHECK(bell.matrix(r, c).real() == doctest::Approx(0.5));
  CHECK(bell.matrix(1, 1) == Complex{});

  const auto rho = density_of(random_state({2, 3, 2}, 4));
  CHECK(std::abs(rho.matrix.trace() - 1.0) < 1e-12);
  CHECK(hermitian(rho.matrix, 1e-12));

  CHECK_THROWS_AS(density_of(random_state({4, 4, 4, 5}, 1)), std::invalid_argument);
}

TEST_CASE("partial_transpose_pair") {
  // Real product state: unchanged.
  const PureState prod = catalog::product({{0.6, 0.8}, {1.0, 2.0}, {3.0, 1.0}});
  const auto rho = density_of(prod);
  CHECK(max_abs_diff(partial_transpose_pair(rho, 0, 2).matrix, rho.matrix) < 1e-15);

  // Two parties: full transpose, equal to ρ for a real Bell state.
  const auto bell = density_of(catalog::maximally_entangled(2));
  const auto bt = partial_transpose_pair(bell, 0, 1);
  CHECK(max_abs_diff(bt.matrix, transpose(bell.matrix)) < 1e-15);
  CHECK(max_abs_diff(bt.matrix, bell.matrix) < 1e-15);

  // Full transpose of a complex two-party ρ equals its conjugate.
  const auto c2 = density_of(random_state({2, 3}, 6));
  const auto t2 = partial_transpose_pair(c2, 0, 1);
  for (std::size_t k = 0; k < c2.matrix.entries.size(); ++k)
    CHECK(std::abs(t2.matrix.entries[k] - std::conj(c2.matrix.entries[k])) < 1e-15);

  // Involution, trace and Hermiticity on random 2⊗2⊗2.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = density_of(random_state({2, 2, 2}, seed));
    for (auto [i, j] : {std::pair{0u, 1u}, {0u, 2u}, {1u, 2u}}) {
      const auto once = partial_transpose_pair(r, i, j);
      const auto twice = partial_transpose_pair(once, i, j);
      CHECK(max_abs_diff(twice.matrix, r.matrix) <= 1e-15);
      CHECK(std::abs(once.matrix.trace() - 1.0) < 1e-12);
      CHECK(hermitian(once.matrix, 1e-12));
    }
  }
  CHECK_THROWS_AS(partial_transpose_pair(bell, 1, 0), std::invalid_argument);
}

TEST_CASE("kron convention") {
  const DenseMatrix a{2, {1, 2, 3, 4}};
  const DenseMatrix b{2, {0, 5, 6, 7}};
  const auto k = kron(a, b);
  // (A ⊗ B)_{(a,b),(c,d)} = A_ac B_bd with row index a*2 + b.
  CHECK(k(0 * 2 + 1, 1 * 2 + 0) == a(0, 1) * b(1, 0));
  CHECK(k(1 * 2 + 1, 0 * 2 + 1) == a(1, 0) * b(1, 1));
}

TEST_CASE("m_operator") {
  const auto ss = m_operator({2, 2}, 0, 1, 0, 0);
  REQUIRE(ss.size == 4);
  // S = [[0,1],[-1,0]]: S⊗S has +1 at (0,3), (3,0) and -1 at (1,2), (2,1).
  CHECK(ss(0, 3) == Complex(1.0));
  CHECK(ss(3, 0) == Complex(1.0));
  CHECK(ss(1, 2) == Complex(-1.0));
  CHECK(ss(2, 1) == Complex(-1.0));
  const PureState bell = catalog::maximally_entangled(2);
  for (std::size_t r = 0; r < 4; ++r) {
    Complex v{};
    for (std::size_t c = 0; c < 4; ++c) v += ss(r, c) * bell[c];
    CHECK(std::abs(v - bell[r]) < 1e-15);
  }

  const auto m = m_operator({2, 2, 2}, 0, 1, 0, 0);
  REQUIRE(m.size == 8);
  CHECK(max_abs_diff(m, kron(ss, DenseMatrix{2, {1, 0, 0, 1}})) == 0.0);

  // Symmetric: each antisymmetric generator appears twice.
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 1; ++b) {
      const auto op = m_operator({3, 2, 2}, 0, 2, a, b);
      CHECK(max_abs_diff(op, transpose(op)) == 0.0);
    }
  CHECK_THROWS_AS(m_operator({2, 2}, 0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(m_operator({2, 2, 2}, 1, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("definitional_component") {
  const PureState ghz = catalog::ghz(3);
  CHECK(definitional_component(ghz, 0, 1, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(definitional_component(ghz, 1, 2, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));

  // Two parties: ρ^{T12} = |ψ*⟩⟨ψ*|, so the component is |⟨ψ|M|ψ*⟩|.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState psi = random_state({2, 3}, seed);
    for (std::size_t b = 0; b < 3; ++b) {
      const auto m = m_operator(psi.dims(), 0, 1, 0, b);
      Complex amp{};
      for (std::size_t r = 0; r < psi.size(); ++r)
        for (std::size_t c = 0; c < psi.size(); ++c)
          amp += std::conj(psi[r]) * m(r, c) * std::conj(psi[c]);
      CHECK(definitional_component(psi, 0, 1, 0, b) == doctest::Approx(std::abs(amp)).epsilon(1e-12));
    }
  }
  CHECK(definitional_component(catalog::maximally_entangled(2), 0, 1, 0, 0) ==
        doctest::Approx(1.0));
}

TEST_CASE("definitional expectations are real and nonnegative") {
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{3, 2, 2}, Dims{2, 2, 2, 2}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PureState psi = random_state(dims, 40 + seed);
      for (std::size_t i = 0; i < dims.size(); ++i)
        for (std::size_t j = i + 1; j < dims.size(); ++j)
          for (std::size_t a = 0; a < generator_count(dims[i]); ++a)
            for (std::size_t b = 0; b < generator_count(dims[j]); ++b)
              CHECK_NOTHROW(definitional_component(psi, i, j, a, b));
    }
  }
}
