#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "concvec/bipartite.hpp"
#include "concvec/catalog.hpp"
#include "concvec/multipartite.hpp"
#include "concvec/oracle.hpp"
#include "concvec/son_algebra.hpp"
#include "test_support.hpp"

using namespace concvec;
using namespace concvec::multipartite;

namespace {

double ww_pair(double s) { return 2.0 / 3.0 * std::sqrt(1.5 * s * (s - 1.0) + 1.0); }
double gw_pair(double s) { return std::sqrt(s * (5.0 * s - 4.0) + 8.0) / (3.0 * std::sqrt(2.0)); }

}  // namespace

TEST_CASE("GHZ3 components and norms") {
  const PureState ghz = catalog::ghz(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(pairwise_component(ghz, i, j, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
      CHECK(pairwise_norm(ghz, i, j) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
  }
  CHECK(total_concurrence(ghz).total == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
}

TEST_CASE("W3, anti-W3 and EPR times single") {
  for (const PureState& s : {catalog::w(3), catalog::anti_w(3)}) {
    const auto r = total_concurrence(s);
    REQUIRE(r.pairs.size() == 3);
    for (const auto& p : r.pairs) CHECK(p.norm == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(r.total == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
  }
  const PureState epr = catalog::epr_times_single({0.6, 0.0}, {0.0, 0.8});
  const auto r = total_concurrence(epr);
  CHECK(r.pairs[0].norm == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.pairs[1].norm < 1e-12);
  CHECK(r.pairs[2].norm < 1e-12);
  CHECK(r.total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("GHZ_m total concurrence") {
  for (std::size_t m = 3; m <= 7; ++m) {
    const double expected = std::sqrt(double(m * (m - 1))) / 2.0;
    CHECK(total_concurrence(catalog::ghz(m)).total == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(total_concurrence(catalog::ghz(4)).total == doctest::Approx(std::sqrt(3.0)));
  // Without spectators GHZ_2 is the Bell state, whose concurrence is 1.
  CHECK(total_concurrence(catalog::ghz(2)).total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("product state components vanish") {
  const PureState k000 = make_state({2, 2, 2}, {{{0, 0, 0}, 1.0}}, false);
  CHECK(pairwise_component(k000, 0, 2, 0, 0) == 0.0);
  CHECK(total_concurrence(k000).total == 0.0);
}

TEST_CASE("superposition curves") {
  for (int step = 0; step <= 10; ++step) {
    const double s = step / 10.0;
    for (double phi : {0.0, std::numbers::pi / 3.0, std::numbers::pi}) {
      const auto ww = total_concurrence(catalog::ww_superposition(s, phi));
      const auto gw = total_concurrence(catalog::gw_superposition(s, phi));
      for (std::size_t p = 0; p < 3; ++p) {
        CHECK(std::abs(ww.pairs[p].norm - ww_pair(s)) < 1e-9);
        CHECK(std::abs(gw.pairs[p].norm - gw_pair(s)) < 1e-9);
      }
      CHECK(std::abs(ww.total - std::sqrt(3.0) * ww_pair(s)) < 1e-9);
      CHECK(std::abs(gw.total - std::sqrt(3.0) * gw_pair(s)) < 1e-9);
    }
  }
  // s = 1/2 on the W–anti-W curve: (2/3)√(5/8).
  CHECK(pairwise_norm(catalog::ww_superposition(0.5, 0.4), 0, 1) ==
        doctest::Approx(2.0 / 3.0 * std::sqrt(5.0 / 8.0)).epsilon(1e-13));
}

TEST_CASE("bipartite consistency") {
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{3, 4}, Dims{4, 2}}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const PureState psi = random_state(dims, seed);
      const auto sub = pairwise_subvector(psi, 0, 1);
      REQUIRE(std::abs(sub.norm - bipartite::concurrence_norm(psi)) < 1e-10);
      const auto vec = bipartite::concurrence_vector(psi);
      REQUIRE(sub.rows == vec.rows);
      REQUIRE(sub.cols == vec.cols);
      for (std::size_t a = 0; a < sub.rows; ++a)
        for (std::size_t b = 0; b < sub.cols; ++b)
          REQUIRE(std::abs(sub.at(a, b) - std::abs(vec.at(a, b))) < 1e-10);
    }
  }
}

TEST_CASE("subvector invariants") {
  const PureState psi = random_state({3, 2, 4}, 12);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto sub = pairwise_subvector(psi, i, j);
      double sq = 0.0;
      for (double c : sub.components) {
        CHECK(c >= 0.0);
        sq += c * c;
      }
      CHECK(std::abs(sq - sub.norm * sub.norm) < 1e-12);
      CHECK(sub.at(0, 0) == doctest::Approx(pairwise_component(psi, i, j, 0, 0)));
    }
  }
  const auto r = total_concurrence(psi);
  double sum = 0.0;
  for (const auto& p : r.pairs) sum += p.norm * p.norm;
  CHECK(std::abs(r.total * r.total - sum) < 1e-12);
}

TEST_CASE("factorization nulls and embedding reduction") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    // Subsystem 0 in a product with the rest.
    const PureState single = PureState::from_amplitudes({3}, testing::random_local(3, rng), true);
    const PureState rest = random_state({2, 3}, rng());
    const PureState psi = testing::renormalized(tensor_product(single, rest));
    CHECK(pairwise_norm(psi, 0, 1) < 1e-10);
    CHECK(pairwise_norm(psi, 0, 2) < 1e-10);
    CHECK(pairwise_norm(psi, 1, 2) > 1e-3);

    // Pair (0,1) jointly disentangled from a spectator.
    const PureState phi = random_state({2, 3}, rng());
    const PureState chi = random_state({2, 2}, rng());
    const PureState emb = testing::renormalized(tensor_product(phi, chi));
    CHECK(std::abs(pairwise_norm(emb, 0, 1) - bipartite::concurrence_norm(phi)) < 1e-10);
    CHECK(std::abs(pairwise_norm(emb, 2, 3) - bipartite::concurrence_norm(chi)) < 1e-10);
  }
}

TEST_CASE("local-unitary invariance including spectators") {
  std::mt19937_64 rng(31);
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{2, 3, 2}, Dims{3, 2, 2, 2}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const PureState psi = random_state(dims, rng());
      const auto before = total_concurrence(psi);
      for (std::size_t axis = 0; axis < dims.size(); ++axis) {
        const auto u = testing::random_unitary(dims[axis], rng);
        const auto after = total_concurrence(apply_local(psi, axis, u));
        for (std::size_t p = 0; p < before.pairs.size(); ++p) {
          CHECK(std::abs(after.pairs[p].norm - before.pairs[p].norm) < 1e-9);
        }
        CHECK(std::abs(after.total - before.total) < 1e-9);
      }
    }
  }
}

TEST_CASE("subsystem relabeling covariance") {
  const PureState psi = random_state({2, 3, 2, 2}, 55);
  const auto base = total_concurrence(psi);
  const std::vector<std::size_t> order = {2, 0, 3, 1};
  const auto moved = total_concurrence(permute_subsystems(psi, order));
  CHECK(std::abs(moved.total - base.total) < 1e-12);
  for (const auto& p : moved.pairs) {
    const std::size_t a = std::min(order[p.i], order[p.j]);
    const std::size_t b = std::max(order[p.i], order[p.j]);
    CHECK(std::abs(p.norm - pairwise_norm(psi, a, b)) < 1e-12);
  }
}

TEST_CASE("separability flag") {
  const PureState k00 = make_state({2, 2}, {{{0, 0}, 1.0}}, false);
  CHECK(separability_flag(k00) == Separability::separable_certified);
  CHECK(separability_flag(catalog::maximally_entangled(2)) == Separability::entangled);
  CHECK(separability_flag(catalog::ghz(3)) == Separability::entangled);
  const PureState k000 = make_state({2, 2, 2}, {{{0, 0, 0}, 1.0}}, false);
  CHECK(separability_flag(k000) == Separability::inconclusive);
  CHECK(std::string(to_string(Separability::inconclusive)) == "inconclusive");
  // tol governs the threshold
  CHECK(separability_flag(catalog::ghz(3), 10.0) == Separability::inconclusive);
}

TEST_CASE("argument validation") {
  const PureState ghz = catalog::ghz(3);
  CHECK_THROWS_AS(pairwise_norm(ghz, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_norm(ghz, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_norm(ghz, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_component(ghz, 0, 1, 1, 0), std::invalid_argument);
  const PureState single = make_state({3}, {{{0}, 1.0}}, false);
  CHECK_THROWS_AS(total_concurrence(single), std::invalid_argument);
}

TEST_CASE("closed form matches the dense definition on random states") {
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{2, 3, 2}, Dims{3, 3, 2}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PureState psi = random_state(dims, 300 + seed);
      for (std::size_t i = 0; i < dims.size(); ++i)
        for (std::size_t j = i + 1; j < dims.size(); ++j)
          for (std::size_t a = 0; a < generator_count(dims[i]); ++a)
            for (std::size_t b = 0; b < generator_count(dims[j]); ++b)
              REQUIRE(std::abs(pairwise_component(psi, i, j, a, b) -
                               oracle::definitional_component(psi, i, j, a, b)) < 1e-9);
    }
  }
}
