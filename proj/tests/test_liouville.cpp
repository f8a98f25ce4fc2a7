#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "ptcl/error.hpp"
#include "ptcl/liouville.hpp"

using namespace ptcl;
using doctest::Approx;

namespace {

constexpr cplx kI{0.0, 1.0};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("KS map branch and defining relation") {
  const MapPoint m = map_eval({0.5}, {0.0, -1.0});
  CHECK(std::abs(m.r - cplx{0.0, -1.0}) <= 1e-15);

  for (int trial = 0; trial < 300; ++trial) {
    const double k = oracle::uniform(0.05, 5.0) * (trial % 4 ? 1.0 : -1.0);
    const cplx t{oracle::uniform(-10.0, 10.0), oracle::uniform(-10.0, 10.0)};
    const MapPoint p = map_eval({k}, t);
    const double scale = std::max(1.0, std::abs(k * t));
    CHECK(std::abs(p.r * p.r + 2.0 * kI * k * t) <= 1e-13 * scale);
    CHECK(std::abs(p.d1 * 2.0 * p.r + 2.0 * kI * k) <= 1e-13 * std::max(1.0, std::abs(k)));
    if (k > 0.0) CHECK(p.r.imag() <= 0.0);
  }

  // higher derivatives against differences of the closed-form lower ones
  const MapKS map{0.7};
  const cplx t{1.3, -0.6};
  const MapPoint p = map_eval(map, t);
  CHECK(oracle::rel_err(p.d2, oracle::central_difference([&](cplx u) { return map_eval(map, u).d1; }, t, 1e-5)) <= 1e-8);
  CHECK(oracle::rel_err(p.d3, oracle::central_difference([&](cplx u) { return map_eval(map, u).d2; }, t, 1e-5)) <= 1e-8);

  CHECK(code_of([] { map_eval({1.0}, 0.0); }) == ErrorCode::OnCutOrOrigin);
  CHECK(code_of([] { map_eval({1.0}, {0.0, 2.0}); }) == ErrorCode::OnCutOrOrigin);
  CHECK(code_of([] { map_eval({0.0}, {1.0, 0.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("identity map is neutral") {
  const EffectivePotential w = oscillator_potential(0.8);
  const auto id = identity_map();
  for (cplx t : {cplx{1.0, -1.0}, cplx{-2.0, -0.5}, cplx{3.0, 0.2}}) {
    CHECK(transform_potential(w, id, t, 2.5) == w(t) - 2.5);
    const auto chi = [](cplx r) { return std::exp(-r * r / 2.0) * r; };
    CHECK(transform_wavefunction(chi, id, t) == chi(t));
  }
}

TEST_CASE("Schwarzian part of a square-root map") {
  const EffectivePotential zero{0.0, nullptr, 0.0};
  for (double k : {0.5, 1.0, 3.0})
    for (cplx t : {cplx{1.0, -1.0}, cplx{-0.4, -2.0}, cplx{5.0, 3.0}}) {
      // with a vanishing source only the Schwarzian terms survive
      const cplx s = transform_potential(zero, map_eval({k}, t), 0.0);
      CHECK(oracle::rel_err(s, -3.0 / (16.0 * t * t)) <= 1e-13);
    }
}

TEST_CASE("oscillator potential maps onto Coulomb potential") {
  const cplx t{1.0, -1.0};
  for (double A : {0.3, 0.5, 1.2})
    for (int n = 0; n <= 3; ++n)
      for (int q : {+1, -1}) {
        const QuantumState s(n, q);
        if (std::abs(coulomb_denominator(s, A)) < 1e-12) continue;
        const double alpha = 2.0 * A;
        const double eps_sq = ho_energy(s, alpha);
        const double k2 = ks_kappa_sq(eps_sq, 1.0);
        const cplx lhs = transform_potential(oscillator_potential(alpha), ks_map({k2}), t, eps_sq);
        const cplx rhs = (A * A - 0.25) / (t * t) + kI / t - k2 * k2;
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }

  CHECK(code_of([] {
          transform_potential(oscillator_potential(1.0), MapPoint{1.0, 0.0, 0.0, 0.0}, 1.0);
        }) == ErrorCode::ZeroJacobian);
}

TEST_CASE("parameter link") {
  CHECK(ks_big_a(1.0) == 0.5);
  CHECK(ks_kappa_sq(2.0, 1.0) == 1.0);
  CHECK(ks_kappa_sq(4.0, 2.0) == 1.0);
  CHECK(code_of([] { ks_kappa_sq(0.0, 1.0); }) == ErrorCode::ZeroEnergy);
  CHECK(code_of([] { ks_big_a(0.0); }) == ErrorCode::InvalidArgument);

  // the Schwarzian shifts l(l+1) = alpha^2 - 1/4 into L(L+1) = l(l+1)/4 - 3/16
  for (double alpha : {0.6, 1.0, 2.4, 3.7}) {
    const double l_term = alpha * alpha - 0.25;
    const double A = ks_big_a(alpha);
    CHECK(A * A - 0.25 == Approx(l_term / 4.0 - 3.0 / 16.0).epsilon(1e-15));
  }

  // kappa^2 from the oscillator energy agrees with the Coulomb formula
  for (double alpha : {0.6, 1.0, 2.4})
    for (int n = 0; n <= 3; ++n)
      for (int q : {+1, -1}) {
        const QuantumState s(n, q);
        const double A = ks_big_a(alpha);
        if (std::abs(coulomb_denominator(s, A)) < 1e-12) continue;
        CHECK(ks_kappa_sq(ho_energy(s, alpha), 1.3) == Approx(kappa_sq(s, A, 1.3)).epsilon(1e-14));
      }
}

TEST_CASE("central identity on the parabola") {
  const Contour parabola = Contour::ks_parabola(1.0, 1.0);
  for (double alpha : {0.6, 1.0, 2.4})
    for (int n = 0; n <= 3; ++n)
      for (int q : {+1, -1}) {
        const QuantumState s(n, q);
        if (std::abs(coulomb_denominator(s, ks_big_a(alpha))) < 1e-12) continue;
        CHECK(check_central_identity(s, alpha, 1.0, parabola, 50).max_scaled_deviation <= 1e-10);
      }
}

TEST_CASE("wavefunction transport has a constant ratio") {
  const Contour parabola = Contour::ks_parabola(1.0, 1.0);
  const TransportReport ground = check_wavefunction_transport({0, -1}, 1.0, 1.0, parabola, 20);
  CHECK(ground.ratio_spread <= 1e-10);
  CHECK(std::abs(ground.mean_ratio) > 0.0);
  CHECK(check_wavefunction_transport({2, +1}, 3.0, 1.0, parabola, 20).ratio_spread <= 1e-10);

  // a mismatched kappa^2 breaks proportionality
  const auto chi = [](cplx r) { return ho_wavefunction({0, -1}, 1.0, r); };
  std::vector<double> xs{-3.0, -1.0, 0.5, 2.0};
  const auto moved = transport_along_contour(chi, ks_map({0.8}), parabola, xs);
  std::vector<cplx> ratios;
  for (std::size_t i = 0; i < xs.size(); ++i)
    ratios.push_back(moved[i] / coulomb_wavefunction({0, -1}, 0.5, 1.0, parabola.eval(xs[i])));
  CHECK(std::abs(ratios.front() - ratios.back()) > 1e-3 * std::abs(ratios.front()));
}
