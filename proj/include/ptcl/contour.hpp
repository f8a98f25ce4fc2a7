#pragma once

#include <complex>
#include <map>
#include <string>

namespace ptcl {

using cplx = std::complex<double>;

enum class ContourKind { ShiftedLine, KSParabola, DecayingShiftLine };

std::string to_string(ContourKind kind);
ContourKind contour_kind_from_string(const std::string& name);

/// Side from which a derivative is taken at the kink of DecayingShiftLine.
/// Smooth kinds ignore it.
enum class Approach { Symmetric, FromLeft, FromRight };

/// PT-symmetric integration path t(x), x in [-x_max, x_max], with
/// t(-x) = -conj(t(x)).
///
///   ShiftedLine:        t = x - i c
///   KSParabola:         t = x c / k + i (x^2 - c^2) / (2 k),   k = kappa_c_sq
///   DecayingShiftLine:  t = x - i c / (1 + |x|)^(1 + eta)
///
/// kappa_c_sq is a property of the path only; it is unrelated to the
/// state-dependent scale of the Coulomb model.
class Contour {
 public:
  static constexpr double kOscillatorXMax = 12.0;
  static constexpr double kCoulombXMax = 20.0;

  static Contour shifted_line(double c, double x_max = kOscillatorXMax);
  static Contour ks_parabola(double c, double kappa_c_sq, double x_max = kCoulombXMax);
  static Contour decaying_shift_line(double c, double eta, double x_max = kOscillatorXMax);

  ContourKind kind() const noexcept { return kind_; }
  double c() const noexcept { return c_; }
  double kappa_c_sq() const noexcept { return kappa_c_sq_; }
  double eta() const noexcept { return eta_; }
  double x_max() const noexcept { return x_max_; }

  Contour with_x_max(double x_max) const;

  cplx eval(double x) const;
  /// Exact derivative d^order t / dx^order, order in {1, 2}.
  cplx deriv(double x, int order, Approach approach = Approach::Symmetric) const;

  /// Flat key/value form: kind, c, kappa_c_sq, eta, x_max.
  std::map<std::string, std::string> to_record() const;
  static Contour from_record(const std::map<std::string, std::string>& record);

  friend bool operator==(const Contour&, const Contour&) = default;

 private:
  Contour(ContourKind kind, double c, double kappa_c_sq, double eta, double x_max);
  void check_domain(double x) const;

  ContourKind kind_;
  double c_;
  double kappa_c_sq_;
  double eta_;
  double x_max_;
};

/// max over a uniform sample of [-x_max, x_max] of |t(-x) + conj(t(x))|,
/// each term divided by max(1, |t(x)|).
double check_pt_symmetry(const Contour& contour, int samples);

}  // namespace ptcl
