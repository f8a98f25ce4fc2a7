#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ptcl/contour.hpp"
#include "ptcl/models.hpp"

namespace ptcl {

using cplx = std::complex<double>;

/// Potential of the form centrifugal_coeff / z^2 + interaction(z).
/// energy_shift is the energy subtracted by shifted().
struct EffectivePotential {
  double centrifugal_coeff = 0.0;
  std::function<cplx(cplx)> interaction;
  double energy_shift = 0.0;

  cplx operator()(cplx z) const {
    cplx v = centrifugal_coeff / (z * z);
    if (interaction) v += interaction(z);
    return v;
  }
  cplx shifted(cplx z) const { return (*this)(z) - energy_shift; }
};

/// (alpha^2 - 1/4)/r^2 + r^2
EffectivePotential oscillator_potential(double alpha);
/// (A^2 - 1/4)/t^2 + i Ze^2 / t
EffectivePotential coulomb_potential(double A, double z_e2);

/// r(t) and its first three derivatives at one point.
struct MapPoint {
  cplx r;
  cplx d1;
  cplx d2;
  cplx d3;
};

using VariableChange = std::function<MapPoint(cplx)>;

/// r^2 = -2 i kappa_sq t. kappa_sq may be negative (flown-away states), never zero.
struct MapKS {
  double kappa_sq;
};

/// r = sqrt(2|kappa_sq|) exp(-i pi/4 sgn kappa_sq) t^(1/2), with t^(1/2) on the
/// plane cut upward from the origin; for kappa_sq > 0 this puts r in the
/// lower half plane.
MapPoint map_eval(const MapKS& map, cplx t);

VariableChange ks_map(const MapKS& map);
VariableChange identity_map();

/// (r')^2 [source(r) - eps^2] + 3/4 (r''/r')^2 - 1/2 r'''/r', i.e. the
/// transformed combination L(L+1)/t^2 + V(t) - E at t.
cplx transform_potential(const EffectivePotential& source, const MapPoint& m, double epsilon_sq);
cplx transform_potential(const EffectivePotential& source, const VariableChange& map, cplx t,
                         double epsilon_sq);

/// chi(r(t)) / sqrt(r'(t)) on the principal square-root branch.
cplx transform_wavefunction(const std::function<cplx(cplx)>& chi, const VariableChange& map, cplx t);

/// Same transform at contour points t(x) for each x in xs, with the branch of
/// sqrt(r') continued along the contour from the principal value at x = 0.
std::vector<cplx> transport_along_contour(const std::function<cplx(cplx)>& chi,
                                          const VariableChange& map, const Contour& contour,
                                          std::span<const double> xs);

/// A = alpha / 2
double ks_big_a(double alpha);
/// kappa^2 = 2 Ze^2 / eps^2
double ks_kappa_sq(double epsilon_sq, double z_e2);

struct IdentityReport {
  double max_scaled_deviation;  ///< max |lhs - rhs| / (1 + |t|^-2)
  int points;
};

/// Oscillator (n, q, alpha) pushed through the KS map with kappa^2 = 2Ze^2/eps^2,
/// compared with (A^2-1/4)/t^2 + i Ze^2/t - E at `points` contour points.
IdentityReport check_central_identity(const QuantumState& s, double alpha, double z_e2,
                                      const Contour& contour, int points);

struct TransportReport {
  double ratio_spread;  ///< max_i |ratio_i - mean| / |mean|
  cplx mean_ratio;
  int points;
};

/// Ratio of the transported oscillator state to the closed-form Coulomb state
/// with A = alpha/2 at `points` contour points. The sampled range is trimmed
/// symmetrically so that |kappa^2 Im t| <= 500.
TransportReport check_wavefunction_transport(const QuantumState& s, double alpha, double z_e2,
                                             const Contour& contour, int points);

}  // namespace ptcl
