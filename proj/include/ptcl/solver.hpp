#pragma once

#include <complex>
#include <vector>

#include "ptcl/contour.hpp"
#include "ptcl/liouville.hpp"

namespace ptcl {

using cplx = std::complex<double>;

/// Which decaying asymptotic form seeds the tail integration.
enum class TailModel {
  Oscillator,  ///< exp(-r^2/2) r^((E-1)/2)
  Coulomb,     ///< exp(i k t) t^(Ze^2/(2k)), k = sqrt(E)
};

enum class Side { Left, Right };

/// -y'' + V(t) y = E y posed on contour t(x), shot inward from x = -tail_x and
/// x = +tail_x and matched at match_x.
struct ShootingProblem {
  EffectivePotential potential;
  TailModel tail_model;
  double z_e2;  ///< Coulomb coupling entering the tail exponent; unused for the oscillator
  Contour contour;
  double match_x = 0.0;
  double tail_x = 0.0;  ///< 0 selects contour.x_max()
  double step_tol = 1e-10;

  double effective_tail_x() const { return tail_x > 0.0 ? tail_x : contour.x_max(); }
};

ShootingProblem oscillator_problem(double alpha, const Contour& contour);
ShootingProblem coulomb_problem(double A, double z_e2, const Contour& contour);

/// Solution and its t-derivative at the match point, up to a common factor.
struct HalfSolution {
  cplx psi;
  cplx dpsi;
  long evaluations;
};

HalfSolution integrate_halfline(const ShootingProblem& p, double energy, Side side);

/// Normalized Wronskian mismatch
///   |psi_L dpsi_R - psi_R dpsi_L| / (|psi_L dpsi_R| + |psi_R dpsi_L| + tiny),
/// zero at eigenvalues.
double match_function(const ShootingProblem& p, double energy);

struct EigenResult {
  double energy;
  double match_residual;
  long evaluations;
  bool converged;
};

struct ScanOptions {
  double candidate_threshold = 0.1;  ///< grid minima above this are not refined
  double accept_tol = 1e-8;          ///< refined residual gate
  double merge_rel = 1e-8;           ///< duplicates closer than this (relative) are merged
};

/// Grid scan of match_function over [e_min, e_max] followed by golden-section
/// refinement of every local minimum and a secant polish on the complex
/// mismatch. Only candidates whose residual passes accept_tol are returned,
/// sorted by energy.
std::vector<EigenResult> scan_eigenvalues(const ShootingProblem& p, double e_min, double e_max, int grid,
                                          const ScanOptions& options = {});

}  // namespace ptcl
