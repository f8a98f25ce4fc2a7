#include "ptcl/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptcl/error.hpp"
#include "ptcl/ode.hpp"

namespace ptcl {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kTiny = 1e-300;

struct Mismatch {
  cplx value;       // signed normalized Wronskian, analytic-like in E near a root
  double residual;  // |value|
  long evaluations;
};

Mismatch mismatch(const ShootingProblem& p, double energy) {
  const HalfSolution left = integrate_halfline(p, energy, Side::Left);
  const HalfSolution right = integrate_halfline(p, energy, Side::Right);
  const cplx a = left.psi * right.dpsi;
  const cplx b = right.psi * left.dpsi;
  const cplx w = (a - b) / (std::abs(a) + std::abs(b) + kTiny);
  return {w, std::abs(w), left.evaluations + right.evaluations};
}

// Log-derivative of the decaying tail solution at path point z.
cplx tail_log_derivative(const ShootingProblem& p, double energy, cplx z) {
  switch (p.tail_model) {
    case TailModel::Oscillator: {
      const double beta = 0.5 * (energy - 1.0);
      return beta / z - z;
    }
    case TailModel::Coulomb: {
      if (!(energy > 0.0))
        throw Error(ErrorCode::InvalidArgument, "Coulomb shooting needs a positive trial energy");
      const double k = std::sqrt(energy);
      const double gamma = p.z_e2 / (2.0 * k);
      return kI * k + gamma / z;
    }
  }
  return {};
}

}  // namespace

ShootingProblem oscillator_problem(double alpha, const Contour& contour) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  return {oscillator_potential(alpha), TailModel::Oscillator, 0.0, contour};
}

ShootingProblem coulomb_problem(double A, double z_e2, const Contour& contour) {
  if (!(A > 0.0)) throw Error(ErrorCode::InvalidArgument, "A must be positive");
  if (!(z_e2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "Ze^2 must be positive");
  return {coulomb_potential(A, z_e2), TailModel::Coulomb, z_e2, contour};
}

HalfSolution integrate_halfline(const ShootingProblem& p, double energy, Side side) {
  const double tail = p.effective_tail_x();
  if (tail > p.contour.x_max() * (1.0 + 1e-12))
    throw Error(ErrorCode::InvalidArgument, "tail_x lies beyond the contour");
  if (!(std::abs(p.match_x) < tail))
    throw Error(ErrorCode::InvalidArgument, "match point must lie strictly inside the tails");

  const double x_start = side == Side::Left ? -tail : tail;
  const Approach approach = side == Side::Left ? Approach::FromLeft : Approach::FromRight;
  const cplx z0 = p.contour.eval(x_start);

  // y = (psi, dpsi/dt); d/dx psi = t' dpsi, d/dx dpsi = t' (V - E) psi
  const Rhs2 rhs = [&](double x, const State2& y) -> State2 {
    const cplx z = p.contour.eval(x);
    const cplx dz = p.contour.deriv(x, 1, approach);
    return {dz * y[1], dz * (p.potential(z) - energy) * y[0]};
  };

  OdeOptions options;
  options.rel_tol = p.step_tol;
  OdeStats stats;
  const State2 start{cplx{1.0, 0.0}, tail_log_derivative(p, energy, z0)};
  const State2 end = integrate_dp45(rhs, x_start, p.match_x, start, options, &stats);
  return {end[0], end[1], stats.evaluations};
}

double match_function(const ShootingProblem& p, double energy) { return mismatch(p, energy).residual; }

std::vector<EigenResult> scan_eigenvalues(const ShootingProblem& p, double e_min, double e_max, int grid,
                                          const ScanOptions& options) {
  if (!(e_min < e_max)) throw Error(ErrorCode::InvalidArgument, "scan window must satisfy e_min < e_max");
  if (grid < 8) throw Error(ErrorCode::InvalidArgument, "scan grid needs at least 8 points");

  std::vector<double> energies(grid);
  std::vector<double> values(grid);
  long evaluations = 0;
  for (int i = 0; i < grid; ++i) {
    energies[i] = e_min + (e_max - e_min) * i / (grid - 1);
    const Mismatch m = mismatch(p, energies[i]);
    values[i] = m.residual;
    evaluations += m.evaluations;
  }

  std::vector<EigenResult> found;
  for (int i = 0; i < grid; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i == grid - 1 || values[i] <= values[i + 1];
    if (!left_ok || !right_ok || !(values[i] < options.candidate_threshold)) continue;

    double lo = energies[std::max(i - 1, 0)];
    double hi = energies[std::min(i + 1, grid - 1)];
    long spent = 0;
    double best_e = energies[i];
    double best_r = values[i];
    auto probe = [&](double e) {
      const Mismatch m = mismatch(p, e);
      spent += m.evaluations;
      if (m.residual < best_r) {
        best_r = m.residual;
        best_e = e;
      }
      return m;
    };

    // golden section on the V-shaped modulus
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = probe(x1).residual;
    double f2 = probe(x2).residual;
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(best_e))) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = probe(x1).residual;
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = probe(x2).residual;
      }
    }

    // secant polish on the signed mismatch; the root is real at an eigenvalue
    const double bracket_lo = energies[std::max(i - 1, 0)];
    const double bracket_hi = energies[std::min(i + 1, grid - 1)];
    double e_prev = best_e;
    Mismatch m_prev = probe(e_prev);
    double e_curr = std::min(best_e + 1e-7 * std::max(1.0, std::abs(best_e)), bracket_hi);
    if (e_curr == e_prev) e_curr = std::max(best_e - 1e-7 * std::max(1.0, std::abs(best_e)), bracket_lo);
    Mismatch m_curr = probe(e_curr);
    for (int it = 0; it < 12; ++it) {
      const cplx slope = (m_curr.value - m_prev.value) / (e_curr - e_prev);
      if (std::abs(slope) == 0.0) break;
      const double step = -(m_curr.value / slope).real();
      if (!std::isfinite(step)) break;
      const double e_next = std::clamp(e_curr + step, bracket_lo, bracket_hi);
      if (e_next == e_curr) break;
      e_prev = e_curr;
      m_prev = m_curr;
      e_curr = e_next;
      m_curr = probe(e_curr);
      if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(e_curr))) break;
    }

    if (best_r <= options.accept_tol) found.push_back({best_e, best_r, evaluations + spent, true});
  }

  std::sort(found.begin(), found.end(), [](const EigenResult& a, const EigenResult& b) { return a.energy < b.energy; });
  std::vector<EigenResult> merged;
  for (const EigenResult& r : found) {
    if (!merged.empty()) {
      EigenResult& back = merged.back();
      if (std::abs(r.energy - back.energy) <= options.merge_rel * std::max(std::abs(r.energy), std::abs(back.energy))) {
        if (r.match_residual < back.match_residual) back = r;
        continue;
      }
    }
    merged.push_back(r);
  }
  return merged;
}

}  // namespace ptcl
