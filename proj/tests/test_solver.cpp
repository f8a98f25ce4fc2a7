#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "ptcl/error.hpp"
#include "ptcl/solver.hpp"

using namespace ptcl;

namespace {

// Normalizable Coulomb levels inside [lo, hi], from the closed form.
std::vector<double> coulomb_levels(double A, double ze2, double lo, double hi) {
  std::vector<double> out;
  for (int n = 0; n < 200; ++n)
    for (int q : {+1, -1}) {
      const QuantumState s(n, q);
      if (std::abs(coulomb_denominator(s, A)) < 1e-12) continue;
      const CoulombLevel l = coulomb_energy(s, A, ze2);
      if (l.normalizable && l.energy >= lo && l.energy <= hi) out.push_back(l.energy);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> energies(const std::vector<EigenResult>& found) {
  std::vector<double> out;
  for (const EigenResult& r : found) out.push_back(r.energy);
  return out;
}

}  // namespace

TEST_CASE("oscillator half-line solutions match at the ground state") {
  const ShootingProblem p = oscillator_problem(0.5, Contour::shifted_line(1.0));
  const HalfSolution left = integrate_halfline(p, 1.0, Side::Left);
  const HalfSolution right = integrate_halfline(p, 1.0, Side::Right);
  CHECK(std::abs(left.dpsi / left.psi - right.dpsi / right.psi) <= 1e-8 * std::abs(left.dpsi / left.psi));
  CHECK(left.evaluations > 0);

  // exact ground state for q = +1, alpha = 1/2 is exp(-r^2/2), so chi'/chi = -r at r = -i
  const cplx r{0.0, -1.0};
  CHECK(oracle::rel_err(right.dpsi / right.psi, -r) <= 1e-8);

  CHECK(match_function(p, 1.0) <= 1e-8);
  CHECK(match_function(p, 1.3) > 1e-3);
  CHECK(match_function(p, 2.0) > 1e-3);
}

TEST_CASE("Coulomb match function at analytic levels") {
  const ShootingProblem p = coulomb_problem(0.3, 1.0, Contour::ks_parabola(1.0, 1.0));
  const double ground = 1.0 / (1.6 * 1.6);
  CHECK(match_function(p, ground) <= 1e-6);
  const double next = 1.0 / (2.4 * 2.4);
  CHECK(match_function(p, 0.5 * (ground + next)) > 1e-3);
  CHECK_THROWS_AS(integrate_halfline(p, -1.0, Side::Left), Error);
}

TEST_CASE("match function is finite on a grid") {
  const ShootingProblem p = coulomb_problem(0.7, 1.0, Contour::ks_parabola(1.0, 1.0));
  for (int i = 0; i < 40; ++i) {
    const double m = match_function(p, 0.05 + 3.0 * i / 39);
    CHECK(std::isfinite(m));
    CHECK(m >= 0.0);
  }
}

TEST_CASE("oscillator scan reproduces both equidistant families") {
  const ShootingProblem p = oscillator_problem(0.75, Contour::shifted_line(1.0));
  const std::vector<EigenResult> found = scan_eigenvalues(p, 0.0, 16.0, 400);
  const std::vector<double> want{0.5, 3.5, 4.5, 7.5, 8.5, 11.5, 12.5, 15.5};
  REQUIRE(found.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(std::abs(found[i].energy - want[i]) <= 1e-5 * want[i]);
    CHECK(found[i].converged);
    CHECK(found[i].match_residual <= 1e-8);
  }
}

TEST_CASE("Coulomb scan finds exactly the normalizable levels") {
  const ShootingProblem p = coulomb_problem(0.3, 1.0, Contour::ks_parabola(1.0, 1.0));
  const std::vector<double> found = energies(scan_eigenvalues(p, 0.05, 3.0, 600));
  const std::vector<double> want = coulomb_levels(0.3, 1.0, 0.05, 3.0);
  REQUIRE(found.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(found[i] - want[i]) <= 1e-5 * want[i]);
}

TEST_CASE("flown-away level is absent") {
  const ShootingProblem p = coulomb_problem(0.8, 1.0, Contour::ks_parabola(1.0, 1.0));
  const double gone = 1.0 / 0.36;
  const std::vector<EigenResult> found = scan_eigenvalues(p, 0.8 * gone, 1.2 * gone, 120);
  CHECK(found.empty());
}

TEST_CASE("eigenvalues do not depend on the parabola or the tail length") {
  const double lo = 0.15, hi = 0.45;
  const std::vector<double> want = coulomb_levels(0.3, 1.0, lo, hi);
  REQUIRE(want.size() == 2);
  std::vector<std::vector<double>> runs;
  for (auto [c, k] : {std::pair{1.0, 1.0}, std::pair{0.5, 1.0}, std::pair{1.0, 2.0}})
    runs.push_back(energies(scan_eigenvalues(coulomb_problem(0.3, 1.0, Contour::ks_parabola(c, k)), lo, hi, 120)));
  for (const auto& run : runs) REQUIRE(run.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(std::abs(runs[0][i] - runs[1][i]) <= 1e-6 * want[i]);
    CHECK(std::abs(runs[0][i] - runs[2][i]) <= 1e-6 * want[i]);
    CHECK(std::abs(runs[1][i] - runs[2][i]) <= 1e-6 * want[i]);
  }

  ShootingProblem shorter = coulomb_problem(0.3, 1.0, Contour::ks_parabola(1.0, 1.0, 25.0));
  shorter.tail_x = 20.0;
  ShootingProblem longer = shorter;
  longer.tail_x = 25.0;
  const std::vector<double> a = energies(scan_eigenvalues(shorter, lo, hi, 120));
  const std::vector<double> b = energies(scan_eigenvalues(longer, lo, hi, 120));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-7 * a[i]);
}
