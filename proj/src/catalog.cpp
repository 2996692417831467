#include "concvec/catalog.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace concvec::catalog {

namespace {

void require_qubits(std::size_t m, const char* family) {
  if (m < 2) {
    throw std::invalid_argument(std::string(family) + ": m must be >= 2");
  }
  // 2^m amplitudes are stored densely.
  if (m > 24) throw std::invalid_argument(std::string(family) + ": m too large");
}

// Basis kets with Hamming weight `weight`, equal amplitudes.
PureState weight_superposition(std::size_t m, std::size_t weight) {
  std::vector<Complex> amps(std::size_t{1} << m);
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (static_cast<std::size_t>(std::popcount(x)) == weight) amps[x] = 1.0;
  }
  return PureState::from_amplitudes(Dims(m, 2), std::move(amps), true);
}

void require_fraction(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in [0, 1]");
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

PureState superpose(const PureState& a, const PureState& b, double s, double phi) {
  require_fraction(s);
  require_finite(phi, "phi");
  const Complex ca = std::sqrt(s);
  const Complex cb = std::sqrt(1.0 - s) * std::polar(1.0, phi);
  std::vector<Complex> amps(a.size());
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = ca * a[x] + cb * b[x];
  // a ⟂ b for every family built here, so this only absorbs round-off.
  return PureState::from_amplitudes(a.dims(), std::move(amps), true);
}

}  // namespace

PureState ghz(std::size_t m) {
  require_qubits(m, "ghz");
  std::vector<Complex> amps(std::size_t{1} << m);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return PureState::from_amplitudes(Dims(m, 2), std::move(amps), true);
}

PureState w(std::size_t m) {
  require_qubits(m, "w");
  return weight_superposition(m, m - 1);
}

PureState anti_w(std::size_t m) {
  require_qubits(m, "anti_w");
  return weight_superposition(m, 1);
}

PureState epr_times_single(Complex alpha, Complex beta) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("epr1: |alpha|^2 + |beta|^2 must equal 1");
  }
  const double h = 1.0 / std::sqrt(2.0);
  return make_state({2, 2, 2},
                    {{{0, 0, 0}, h * alpha},
                     {{0, 0, 1}, h * beta},
                     {{1, 1, 0}, h * alpha},
                     {{1, 1, 1}, h * beta}},
                    false);
}

PureState ww_superposition(double s, double phi) {
  return superpose(w(3), anti_w(3), s, phi);
}

PureState gw_superposition(double s, double phi) {
  return superpose(ghz(3), w(3), s, phi);
}

PureState maximally_entangled(std::size_t n) {
  if (n < 2) throw std::invalid_argument("maxent: n must be >= 2");
  std::vector<Complex> amps(n * n);
  for (std::size_t k = 0; k < n; ++k) amps[k * n + k] = 1.0;
  return PureState::from_amplitudes({n, n}, std::move(amps), true);
}

PureState product(const std::vector<std::vector<Complex>>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  PureState out = PureState::from_amplitudes({factors[0].size()}, factors[0], true);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = tensor_product(out, PureState::from_amplitudes({factors[k].size()}, factors[k], true));
  }
  return PureState::from_amplitudes(out.dims(),
                                    {out.amplitudes().begin(), out.amplitudes().end()},
                                    true);
}

PureState make(std::string_view family, const Params& p) {
  if (family == "ghz") return ghz(p.m);
  if (family == "w") return w(p.m);
  if (family == "anti_w") return anti_w(p.m);
  if (family == "epr1") return epr_times_single(p.alpha, p.beta);
  if (family == "ww") return ww_superposition(p.s, p.phi);
  if (family == "gw") return gw_superposition(p.s, p.phi);
  if (family == "maxent") return maximally_entangled(p.n);
  if (family == "product") return product(p.factors);
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

}  // namespace concvec::catalog
