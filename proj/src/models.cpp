#include "ptcl/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptcl/error.hpp"
#include "ptcl/specialfn.hpp"

namespace ptcl {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kOriginRadius = 1e-12;
constexpr double kDivergenceGap = 1e-12;

void check_origin(cplx z) {
  if (std::abs(z) < kOriginRadius)
    throw Error(ErrorCode::OriginEvaluation, "wavefunction evaluated at the origin");
}

}  // namespace

QuantumState::QuantumState(int n, int q) : n_(n), q_(q) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "principal index n must be >= 0");
  if (q != 1 && q != -1) throw Error(ErrorCode::InvalidArgument, "quasi-parity q must be +1 or -1");
}

cplx cut_up_log(cplx z) {
  double phase = std::arg(z);
  if (phase > std::numbers::pi / 2) phase -= 2.0 * std::numbers::pi;
  return {std::log(std::abs(z)), phase};
}

cplx cut_up_pow(cplx z, double p) { return std::exp(p * cut_up_log(z)); }

double alpha(const OscillatorParams& p) {
  if (p.d < 1 || p.j < 0) throw Error(ErrorCode::InvalidArgument, "need d >= 1 and j >= 0");
  const double base = p.j + (p.d - 2) / 2.0;
  const double sq = base * base + p.f;
  if (!(sq > 0.0))
    throw Error(ErrorCode::NonPositiveAlphaSquared, "[j+(d-2)/2]^2 + f must be positive");
  return std::sqrt(sq);
}

double big_a(const CoulombParams& p) {
  if (p.D < 1 || p.J < 0) throw Error(ErrorCode::InvalidArgument, "need D >= 1 and J >= 0");
  const double base = p.J + (p.D - 2) / 2.0;
  const double sq = base * base + p.F;
  if (!(sq > 0.0))
    throw Error(ErrorCode::NonPositiveASquared, "[J+(D-2)/2]^2 + F must be positive");
  return std::sqrt(sq);
}

double ho_energy(const QuantumState& s, double alpha) {
  return 4.0 * s.n() + 2.0 - 2.0 * s.q() * alpha;
}

WaveDerivs ho_wavefunction_derivs(const QuantumState& s, double alpha, cplx r) {
  check_origin(r);
  const double p = 0.5 - s.q() * alpha;
  const double a = -s.q() * alpha;
  const cplx w = r * r;
  const cplx prefactor = cut_up_pow(r, p) * std::exp(-0.5 * w);
  const cplx lag = laguerre(s.n(), a, w);
  // d/dr of L(r^2) by the chain rule, w' = 2r, w'' = 2
  const cplx lag1 = 2.0 * r * laguerre_deriv(s.n(), a, w, 1);
  const cplx lag2 = 4.0 * w * laguerre_deriv(s.n(), a, w, 2) + 2.0 * laguerre_deriv(s.n(), a, w, 1);
  const cplx log_d = p / r - r;
  const cplx value = prefactor * lag;
  const cplx d1 = prefactor * (log_d * lag + lag1);
  const cplx d2 = prefactor * ((p * (p - 1.0) / w + w - 1.0 - 2.0 * p) * lag + 2.0 * log_d * lag1 + lag2);
  return {value, d1, d2};
}

cplx ho_wavefunction(const QuantumState& s, double alpha, cplx r) {
  check_origin(r);
  const double p = 0.5 - s.q() * alpha;
  const cplx w = r * r;
  return cut_up_pow(r, p) * std::exp(-0.5 * w) * laguerre(s.n(), -s.q() * alpha, w);
}

double coulomb_denominator(const QuantumState& s, double A) {
  return 2.0 * s.n() + 1.0 - 2.0 * s.q() * A;
}

double kappa_sq(const QuantumState& s, double A, double z_e2) {
  if (!(z_e2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "Ze^2 must be positive");
  if (!(A > 0.0)) throw Error(ErrorCode::InvalidArgument, "A must be positive");
  const double den = coulomb_denominator(s, A);
  if (std::abs(den) < kDivergenceGap)
    throw Error(ErrorCode::DivergentState,
                "2n+1-2qA vanishes for n=" + std::to_string(s.n()) + ", q=" + std::to_string(s.q()));
  return z_e2 / den;
}

CoulombLevel coulomb_energy(const QuantumState& s, double A, double z_e2) {
  const double k2 = kappa_sq(s, A, z_e2);
  return {k2 * k2, k2, k2 > 0.0};
}

WaveDerivs coulomb_wavefunction_derivs(const QuantumState& s, double A, double z_e2, cplx t) {
  check_origin(t);
  const double k = kappa_sq(s, A, z_e2);
  const double p = 0.5 - s.q() * A;
  const double a = -2.0 * s.q() * A;
  const cplx w = -2.0 * kI * k * t;
  const cplx dw = -2.0 * kI * k;
  const cplx prefactor = cut_up_pow(t, p) * std::exp(kI * k * t);
  const cplx lag = laguerre(s.n(), a, w);
  const cplx lag1 = dw * laguerre_deriv(s.n(), a, w, 1);
  const cplx lag2 = dw * dw * laguerre_deriv(s.n(), a, w, 2);
  const cplx log_d = p / t + kI * k;
  const cplx value = prefactor * lag;
  const cplx d1 = prefactor * (log_d * lag + lag1);
  const cplx d2 =
      prefactor * ((p * (p - 1.0) / (t * t) - k * k + 2.0 * kI * k * p / t) * lag + 2.0 * log_d * lag1 + lag2);
  return {value, d1, d2};
}

cplx coulomb_wavefunction(const QuantumState& s, double A, double z_e2, cplx t) {
  check_origin(t);
  const double k = kappa_sq(s, A, z_e2);
  const double p = 0.5 - s.q() * A;
  return cut_up_pow(t, p) * std::exp(kI * k * t) * laguerre(s.n(), -2.0 * s.q() * A, -2.0 * kI * k * t);
}

double ho_residual(const QuantumState& s, double alpha, cplx r) {
  const WaveDerivs chi = ho_wavefunction_derivs(s, alpha, r);
  const cplx terms[] = {
      -chi.d2,
      (alpha * alpha - 0.25) / (r * r) * chi.value,
      r * r * chi.value,
      -ho_energy(s, alpha) * chi.value,
  };
  cplx sum{};
  double scale = 0.0;
  for (const cplx& term : terms) {
    sum += term;
    scale += std::abs(term);
  }
  return scale > 0.0 ? std::abs(sum) / scale : 0.0;
}

double coulomb_residual(const QuantumState& s, double A, double z_e2, cplx t) {
  const WaveDerivs psi = coulomb_wavefunction_derivs(s, A, z_e2, t);
  const double energy = coulomb_energy(s, A, z_e2).energy;
  const cplx terms[] = {
      -psi.d2,
      (A * A - 0.25) / (t * t) * psi.value,
      kI * z_e2 / t * psi.value,
      -energy * psi.value,
  };
  cplx sum{};
  double scale = 0.0;
  for (const cplx& term : terms) {
    sum += term;
    scale += std::abs(term);
  }
  return scale > 0.0 ? std::abs(sum) / scale : 0.0;
}

}  // namespace ptcl
