#include "ptcl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptcl/error.hpp"

namespace ptcl {

namespace {

constexpr double kGapTolerance = 1e-6;

void check_indices(int n, int n_prime) {
  if (n < 0 || n_prime < 0) throw Error(ErrorCode::InvalidArgument, "indices must be non-negative");
}

CrossingRecord make_record(CrossingKind kind, int n, int q_prime, int n_prime, double a_crit, double z_e2) {
  const QuantumState upper(n, +1);
  const QuantumState lower(n_prime, q_prime);
  return {kind,
          n,
          n_prime,
          a_crit,
          coulomb_energy(upper, a_crit, z_e2).energy,
          coulomb_denominator(upper, a_crit),
          coulomb_denominator(lower, a_crit)};
}

}  // namespace

std::string to_string(CrossingKind kind) {
  return kind == CrossingKind::OppositeQ ? "opposite" : "same_positive";
}

CrossingRecord crossing_opposite(int n, int n_prime, double z_e2) {
  check_indices(n, n_prime);
  if (n <= n_prime)
    throw Error(ErrorCode::NonPositiveCritical, "opposite-q crossing needs n > n'");
  return make_record(CrossingKind::OppositeQ, n, -1, n_prime, (n - n_prime) / 2.0, z_e2);
}

CrossingRecord crossing_same_positive(int n, int n_prime, double z_e2) {
  check_indices(n, n_prime);
  if (n == n_prime) throw Error(ErrorCode::EqualIndices, "same-q crossing needs n != n'");
  return make_record(CrossingKind::SamePositiveQ, n, +1, n_prime, (n + n_prime + 1) / 2.0, z_e2);
}

std::vector<CrossingRecord> enumerate_crossings(int n_max, double z_e2) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  std::vector<CrossingRecord> out;
  for (int n = 1; n <= n_max; ++n)
    for (int np = 0; np < n; ++np) out.push_back(crossing_opposite(n, np, z_e2));
  for (int n = 1; n <= n_max; ++n)
    for (int np = 0; np < n; ++np) out.push_back(crossing_same_positive(n, np, z_e2));
  return out;
}

std::vector<DivergencePoint> divergence_points(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  std::vector<DivergencePoint> out;
  for (int n = 0; n <= n_max; ++n) out.push_back({n, n + 0.5});
  return out;
}

std::vector<DimensionPair> physical_critical(double a, int d_max) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "critical A must be positive");
  if (d_max < 2) throw Error(ErrorCode::InvalidArgument, "d_max must be at least 2");
  std::vector<DimensionPair> out;
  for (int D = 2; D <= d_max; ++D) {
    const double j = a + 1.0 - D / 2.0;
    const double rounded = std::round(j);
    if (rounded >= 0.0 && std::abs(j - rounded) < 1e-12) out.push_back({D, static_cast<int>(rounded)});
  }
  return out;
}

PathDiagnostics path_diagnostics(const Contour& parabola, const QuantumState& s, double A, double z_e2) {
  if (parabola.kind() != ContourKind::KSParabola)
    throw Error(ErrorCode::InvalidArgument, "path diagnostics need a KS parabola");
  const CoulombLevel level = coulomb_energy(s, A, z_e2);
  if (!level.normalizable) throw Error(ErrorCode::NonNormalizable, "state has kappa^2 <= 0");
  const double sigma = parabola.c() * parabola.c() / (2.0 * level.kappa_sq);
  return {sigma, z_e2 / sigma};
}

CrossingGapScan scan_unlisted_crossings(int n_max, double a_max, double a_step, double z_e2) {
  if (n_max < 0 || !(a_max > 0.0) || !(a_step > 0.0))
    throw Error(ErrorCode::InvalidArgument, "invalid crossing scan range");
  std::vector<double> listed;
  for (const CrossingRecord& r : enumerate_crossings(n_max, z_e2)) listed.push_back(r.a_crit);
  for (const DivergencePoint& d : divergence_points(n_max)) listed.push_back(d.a_div);

  std::vector<QuantumState> states;
  for (int n = 0; n <= n_max; ++n) {
    states.emplace_back(n, +1);
    states.emplace_back(n, -1);
  }

  CrossingGapScan scan{INFINITY, 0.0, 0, 0};
  const int count = static_cast<int>(std::floor(a_max / a_step + 1e-9));
  std::vector<double> energies(states.size());
  for (int k = 1; k <= count; ++k) {
    const double a = k * a_step;
    ++scan.grid_points;
    if (std::any_of(listed.begin(), listed.end(), [a](double c) { return std::abs(a - c) < 1e-9; })) {
      ++scan.skipped_points;
      continue;
    }
    for (std::size_t i = 0; i < states.size(); ++i) energies[i] = coulomb_energy(states[i], a, z_e2).energy;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        const double gap = std::abs(energies[i] - energies[j]) / std::max(energies[i], energies[j]);
        if (gap < scan.min_relative_gap) {
          scan.min_relative_gap = gap;
          scan.at_a = a;
        }
      }
  }
  return scan;
}

int figure_grid_size(double a_min, double a_max, double a_step) {
  if (!(a_min > 0.0) || !(a_min < a_max) || !(a_step > 0.0))
    throw Error(ErrorCode::InvalidArgument, "figure range needs 0 < a_min < a_max and a_step > 0");
  return static_cast<int>(std::floor((a_max - a_min) / a_step + 1e-9)) + 1;
}

std::vector<FigureRow> figure_data(const FigureRequest& request) {
  const int count = figure_grid_size(request.a_min, request.a_max, request.a_step);

  std::vector<std::pair<int, int>> members;  // (n, q)
  switch (request.family) {
    case FigureFamily::QPlus:
      for (int n : request.n_list) members.emplace_back(n, +1);
      break;
    case FigureFamily::QMinus:
      for (int n : request.n_list) members.emplace_back(n, -1);
      break;
    case FigureFamily::Crossing:
      if (request.crossing == CrossingKind::OppositeQ) {
        members = {{request.n, +1}, {request.n_prime, -1}};
      } else {
        if (request.n == request.n_prime) throw Error(ErrorCode::EqualIndices, "same-q crossing needs n != n'");
        members = {{request.n, +1}, {request.n_prime, +1}};
      }
      break;
  }
  for (const auto& [n, q] : members)
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "figure state indices must be non-negative");
  std::sort(members.begin(), members.end(), [](auto l, auto r) { return l.first != r.first ? l.first < r.first : l.second > r.second; });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(count) * members.size());
  for (int k = 0; k < count; ++k) {
    const double a = request.a_min + k * request.a_step;
    for (const auto& [n, q] : members) {
      const QuantumState s(n, q);
      const double den = coulomb_denominator(s, a);
      if (std::abs(den) <= 2.0 * kGapTolerance) {
        rows.push_back({a, n, q, std::nullopt, false});
        continue;
      }
      const double k2 = request.z_e2 / den;
      rows.push_back({a, n, q, k2 * k2, k2 > 0.0});
    }
  }
  return rows;
}

}  // namespace ptcl
