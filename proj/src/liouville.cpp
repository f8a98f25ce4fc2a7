#include "ptcl/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptcl/error.hpp"

namespace ptcl {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kMinJacobian = 1e-12;

// Sub-steps between consecutive samples when continuing sqrt(r') by continuity.
constexpr int kContinuationSubsteps = 64;

constexpr double kMaxExponent = 500.0;

std::vector<double> uniform_grid(const Contour& contour, int points) {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "need at least two contour points");
  std::vector<double> xs(points);
  for (int k = 0; k < points; ++k) xs[k] = -contour.x_max() + 2.0 * contour.x_max() * k / (points - 1);
  return xs;
}

}  // namespace

EffectivePotential oscillator_potential(double alpha) {
  return {alpha * alpha - 0.25, [](cplx r) { return r * r; }, 0.0};
}

EffectivePotential coulomb_potential(double A, double z_e2) {
  return {A * A - 0.25, [z_e2](cplx t) { return kI * z_e2 / t; }, 0.0};
}

MapPoint map_eval(const MapKS& map, cplx t) {
  const double k = map.kappa_sq;
  if (k == 0.0 || !std::isfinite(k)) throw Error(ErrorCode::InvalidArgument, "KS scale must be finite and nonzero");
  if (std::abs(t) < 1e-12) throw Error(ErrorCode::OnCutOrOrigin, "KS map evaluated at the origin");
  if (t.real() == 0.0 && t.imag() > 0.0)
    throw Error(ErrorCode::OnCutOrOrigin, "KS map evaluated on the upward cut");
  const double phase = k > 0.0 ? -std::numbers::pi / 4 : std::numbers::pi / 4;
  const cplx r = std::sqrt(2.0 * std::abs(k)) * std::polar(1.0, phase) * cut_up_pow(t, 0.5);
  const cplx r2 = r * r;
  const cplx d1 = -kI * k / r;
  const cplx d2 = k * k / (r2 * r);
  const cplx d3 = 3.0 * kI * k * k * k / (r2 * r2 * r);
  return {r, d1, d2, d3};
}

VariableChange ks_map(const MapKS& map) {
  return [map](cplx t) { return map_eval(map, t); };
}

VariableChange identity_map() {
  return [](cplx t) { return MapPoint{t, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}; };
}

cplx transform_potential(const EffectivePotential& source, const MapPoint& m, double epsilon_sq) {
  if (std::abs(m.d1) < kMinJacobian) throw Error(ErrorCode::ZeroJacobian, "r'(t) vanishes");
  const cplx curvature = m.d2 / m.d1;
  return m.d1 * m.d1 * (source(m.r) - epsilon_sq) + 0.75 * curvature * curvature - 0.5 * (m.d3 / m.d1);
}

cplx transform_potential(const EffectivePotential& source, const VariableChange& map, cplx t,
                         double epsilon_sq) {
  return transform_potential(source, map(t), epsilon_sq);
}

cplx transform_wavefunction(const std::function<cplx(cplx)>& chi, const VariableChange& map, cplx t) {
  const MapPoint m = map(t);
  if (std::abs(m.d1) < kMinJacobian) throw Error(ErrorCode::ZeroJacobian, "r'(t) vanishes");
  return chi(m.r) / std::sqrt(m.d1);
}

std::vector<cplx> transport_along_contour(const std::function<cplx(cplx)>& chi,
                                          const VariableChange& map, const Contour& contour,
                                          std::span<const double> xs) {
  auto jacobian_at = [&](double x) {
    const MapPoint m = map(contour.eval(x));
    if (std::abs(m.d1) < kMinJacobian) throw Error(ErrorCode::ZeroJacobian, "r'(t) vanishes");
    return m;
  };
  // Follow sqrt(r') from x = 0 to x, flipping sign whenever the principal
  // value jumps away from the previous one.
  const cplx root0 = std::sqrt(jacobian_at(0.0).d1);
  auto continued_root = [&](double x) {
    cplx prev = root0;
    for (int k = 1; k <= kContinuationSubsteps; ++k) {
      const double xk = x * k / kContinuationSubsteps;
      cplx root = std::sqrt(jacobian_at(xk).d1);
      if (std::abs(root - prev) > std::abs(root + prev)) root = -root;
      prev = root;
    }
    return prev;
  };

  std::vector<cplx> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const MapPoint m = jacobian_at(x);
    out.push_back(chi(m.r) / continued_root(x));
  }
  return out;
}

double ks_big_a(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  return alpha / 2.0;
}

double ks_kappa_sq(double epsilon_sq, double z_e2) {
  if (std::abs(epsilon_sq) < 1e-14) throw Error(ErrorCode::ZeroEnergy, "oscillator energy vanishes");
  return 2.0 * z_e2 / epsilon_sq;
}

IdentityReport check_central_identity(const QuantumState& s, double alpha, double z_e2,
                                      const Contour& contour, int points) {
  const double eps_sq = ho_energy(s, alpha);
  const double A = ks_big_a(alpha);
  const double k2 = ks_kappa_sq(eps_sq, z_e2);
  const double energy = coulomb_energy(s, A, z_e2).energy;
  const EffectivePotential source = oscillator_potential(alpha);
  const EffectivePotential target = coulomb_potential(A, z_e2);
  const VariableChange map = ks_map({k2});

  IdentityReport report{0.0, points};
  for (double x : uniform_grid(contour, points)) {
    const cplx t = contour.eval(x);
    const cplx lhs = transform_potential(source, map, t, eps_sq);
    const cplx rhs = target(t) - energy;
    const double scaled = std::abs(lhs - rhs) / (1.0 + 1.0 / std::norm(t));
    report.max_scaled_deviation = std::max(report.max_scaled_deviation, scaled);
  }
  return report;
}

TransportReport check_wavefunction_transport(const QuantumState& s, double alpha, double z_e2,
                                             const Contour& contour, int points) {
  const double eps_sq = ho_energy(s, alpha);
  const double A = ks_big_a(alpha);
  const double k2 = ks_kappa_sq(eps_sq, z_e2);
  // Both sides carry exp(i k2 t); keep |k2 Im t| small enough that neither
  // underflows nor overflows.
  double x_lim = contour.x_max();
  while (x_lim > 1e-3 && std::abs(k2 * contour.eval(x_lim).imag()) > kMaxExponent) x_lim *= 0.95;
  const std::vector<double> xs = uniform_grid(contour.with_x_max(x_lim), points);
  const auto chi = [&](cplx r) { return ho_wavefunction(s, alpha, r); };
  const std::vector<cplx> moved = transport_along_contour(chi, ks_map({k2}), contour, xs);

  std::vector<cplx> ratios;
  ratios.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ratios.push_back(moved[i] / coulomb_wavefunction(s, A, z_e2, contour.eval(xs[i])));

  cplx mean{};
  for (const cplx& r : ratios) mean += r;
  mean /= double(ratios.size());
  double spread = 0.0;
  for (const cplx& r : ratios) spread = std::max(spread, std::abs(r - mean) / std::abs(mean));
  return {spread, mean, points};
}

}  // namespace ptcl
