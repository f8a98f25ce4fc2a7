#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptcl/contour.hpp"
#include "ptcl/models.hpp"

namespace ptcl {

enum class CrossingKind {
  OppositeQ,      ///< (n, +1) meets (n', -1) at A = (n - n')/2
  SamePositiveQ,  ///< (n, +1) meets (n', +1) at A = (n + n' + 1)/2
};

std::string to_string(CrossingKind kind);

/// An exact level coincidence of the Coulomb spectrum. The two denominators
/// 2n+1-2qA are kept so callers can filter on normalizability: at a
/// same-positive-q crossing they have opposite signs.
struct CrossingRecord {
  CrossingKind kind;
  int n;
  int n_prime;
  double a_crit;
  double energy_at_crossing;
  double denominator_n;
  double denominator_n_prime;
};

CrossingRecord crossing_opposite(int n, int n_prime, double z_e2 = 1.0);
CrossingRecord crossing_same_positive(int n, int n_prime, double z_e2 = 1.0);

/// All crossings with 0 <= n' < n <= n_max, opposite-q first.
std::vector<CrossingRecord> enumerate_crossings(int n_max, double z_e2 = 1.0);

struct DivergencePoint {
  int n;
  double a_div;  ///< n + 1/2
};

std::vector<DivergencePoint> divergence_points(int n_max);

struct DimensionPair {
  int D;
  int J;
  friend bool operator==(const DimensionPair&, const DimensionPair&) = default;
};

/// Integer (D, J), 2 <= D <= d_max, J >= 0, with J - 1 + D/2 = a (F = 0).
std::vector<DimensionPair> physical_critical(double a, int d_max);

struct PathDiagnostics {
  double sigma;                   ///< c^2 / (2 kappa^2): radius of the path near the origin
  double effective_charge_scale;  ///< Ze^2 / sigma
};

PathDiagnostics path_diagnostics(const Contour& parabola, const QuantumState& s, double A, double z_e2);

/// Smallest relative gap |E1 - E2| / max(E1, E2) over all pairs of states
/// with n <= n_max on the grid A = k * a_step in (0, a_max], skipping grid
/// points that coincide with a listed crossing or divergence.
struct CrossingGapScan {
  double min_relative_gap;
  double at_a;
  int grid_points;
  int skipped_points;
};

CrossingGapScan scan_unlisted_crossings(int n_max, double a_max, double a_step, double z_e2 = 1.0);

enum class FigureFamily { QPlus, QMinus, Crossing };

struct FigureRequest {
  FigureFamily family = FigureFamily::QMinus;
  double a_min = 0.1;
  double a_max = 3.0;
  double a_step = 0.01;
  std::vector<int> n_list{0, 1, 2};
  double z_e2 = 1.0;
  // Crossing family only
  CrossingKind crossing = CrossingKind::OppositeQ;
  int n = 1;
  int n_prime = 0;
};

struct FigureRow {
  double a;
  int n;
  int q;
  std::optional<double> energy;  ///< empty within 1e-6 of a divergence
  bool normalizable;
};

/// Rows sorted by A, then n, then q (+1 first).
std::vector<FigureRow> figure_data(const FigureRequest& request);

/// Number of grid points a_min + k a_step not exceeding a_max.
int figure_grid_size(double a_min, double a_max, double a_step);

}  // namespace ptcl
