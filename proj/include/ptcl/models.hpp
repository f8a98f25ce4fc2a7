#pragma once

#include <complex>

namespace ptcl {

using cplx = std::complex<double>;

/// Oscillator side: dimension d, partial wave j, extra 1/r^2 strength f.
struct OscillatorParams {
  int d = 1;
  int j = 0;
  double f = 0.0;
};

/// Coulomb side: dimension D, partial wave J, extra 1/t^2 strength F, coupling Ze^2.
struct CoulombParams {
  int D = 3;
  int J = 0;
  double F = 0.0;
  double z_e2 = 1.0;
};

/// (n, q) with n >= 0 and quasi-parity q = +1 or -1.
class QuantumState {
 public:
  QuantumState(int n, int q);

  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  int n_;
  int q_;
};

/// Value with first and second derivative in the model's own variable.
struct WaveDerivs {
  cplx value;
  cplx d1;
  cplx d2;
};

struct CoulombLevel {
  double energy;      ///< E = kappa_sq^2
  double kappa_sq;    ///< Ze^2 / (2n + 1 - 2qA)
  bool normalizable;  ///< kappa_sq > 0
};

// Power functions on the plane cut along the positive imaginary axis,
// arg z in (-3pi/2, pi/2]. On the lower half plane this is the principal
// branch, and it stays continuous across the real axis.
cplx cut_up_log(cplx z);
cplx cut_up_pow(cplx z, double p);

double alpha(const OscillatorParams& p);
double big_a(const CoulombParams& p);

/// eps^2 = 4n + 2 - 2 q alpha.
double ho_energy(const QuantumState& s, double alpha);

/// chi = r^(1/2 - q alpha) exp(-r^2/2) L_n^(-q alpha)(r^2), unnormalized.
cplx ho_wavefunction(const QuantumState& s, double alpha, cplx r);
WaveDerivs ho_wavefunction_derivs(const QuantumState& s, double alpha, cplx r);

/// 2n + 1 - 2 q A; its zero is where the level flies away.
double coulomb_denominator(const QuantumState& s, double A);

double kappa_sq(const QuantumState& s, double A, double z_e2);

/// E = Z^2 e^4 / (2n + 1 - 2qA)^2, tagged with normalizability.
CoulombLevel coulomb_energy(const QuantumState& s, double A, double z_e2);

/// Psi = t^(1/2 - qA) exp(i kappa^2 t) L_n^(-2qA)(-2 i kappa^2 t), unnormalized.
cplx coulomb_wavefunction(const QuantumState& s, double A, double z_e2, cplx t);
WaveDerivs coulomb_wavefunction_derivs(const QuantumState& s, double A, double z_e2, cplx t);

/// |sum of terms| / sum of |terms| of
///   -chi'' + (alpha^2 - 1/4)/r^2 chi + r^2 chi - eps^2 chi.
double ho_residual(const QuantumState& s, double alpha, cplx r);

/// |sum of terms| / sum of |terms| of
///   -Psi'' + (A^2 - 1/4)/t^2 Psi + i Ze^2/t Psi - E Psi.
double coulomb_residual(const QuantumState& s, double A, double z_e2, cplx t);

}  // namespace ptcl
