#include "ptcl/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ptcl/error.hpp"

namespace ptcl {

namespace {

constexpr cplx kI{0.0, 1.0};

double parse_double(const std::map<std::string, std::string>& record, const std::string& key,
                    double fallback) {
  auto it = record.find(key);
  if (it == record.end() || it->second.empty()) return fallback;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size())
    throw Error(ErrorCode::InvalidArgument, "contour field '" + key + "' is not a number");
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(ContourKind kind) {
  switch (kind) {
    case ContourKind::ShiftedLine: return "ShiftedLine";
    case ContourKind::KSParabola: return "KSParabola";
    case ContourKind::DecayingShiftLine: return "DecayingShiftLine";
  }
  return "Unknown";
}

ContourKind contour_kind_from_string(const std::string& name) {
  if (name == "ShiftedLine") return ContourKind::ShiftedLine;
  if (name == "KSParabola") return ContourKind::KSParabola;
  if (name == "DecayingShiftLine") return ContourKind::DecayingShiftLine;
  throw Error(ErrorCode::InvalidArgument, "unknown contour kind '" + name + "'");
}

Contour::Contour(ContourKind kind, double c, double kappa_c_sq, double eta, double x_max)
    : kind_(kind), c_(c), kappa_c_sq_(kappa_c_sq), eta_(eta), x_max_(x_max) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(ErrorCode::InvalidArgument, "contour shift c must be positive");
  if (!(kappa_c_sq > 0.0) || !std::isfinite(kappa_c_sq))
    throw Error(ErrorCode::InvalidArgument, "kappa_c_sq must be positive");
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw Error(ErrorCode::InvalidArgument, "eta must be positive");
  if (!(x_max > 0.0) || !std::isfinite(x_max))
    throw Error(ErrorCode::InvalidArgument, "x_max must be positive");
}

Contour Contour::shifted_line(double c, double x_max) {
  return Contour(ContourKind::ShiftedLine, c, 1.0, 1.0, x_max);
}

Contour Contour::ks_parabola(double c, double kappa_c_sq, double x_max) {
  return Contour(ContourKind::KSParabola, c, kappa_c_sq, 1.0, x_max);
}

Contour Contour::decaying_shift_line(double c, double eta, double x_max) {
  return Contour(ContourKind::DecayingShiftLine, c, 1.0, eta, x_max);
}

Contour Contour::with_x_max(double x_max) const {
  return Contour(kind_, c_, kappa_c_sq_, eta_, x_max);
}

void Contour::check_domain(double x) const {
  // Tolerate rounding in callers that build grids from x_max.
  if (!(std::abs(x) <= x_max_ * (1.0 + 1e-12)))
    throw Error(ErrorCode::OutOfDomain, "|x| exceeds contour x_max");
}

cplx Contour::eval(double x) const {
  check_domain(x);
  switch (kind_) {
    case ContourKind::ShiftedLine:
      return {x, -c_};
    case ContourKind::KSParabola:
      return {x * c_ / kappa_c_sq_, (x * x - c_ * c_) / (2.0 * kappa_c_sq_)};
    case ContourKind::DecayingShiftLine:
      return {x, -c_ * std::pow(1.0 + std::abs(x), -(1.0 + eta_))};
  }
  return {};
}

cplx Contour::deriv(double x, int order, Approach approach) const {
  check_domain(x);
  if (order != 1 && order != 2)
    throw Error(ErrorCode::UnsupportedOrder, "contour derivative order must be 1 or 2");
  switch (kind_) {
    case ContourKind::ShiftedLine:
      return order == 1 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    case ContourKind::KSParabola:
      if (order == 1) return {c_ / kappa_c_sq_, x / kappa_c_sq_};
      return {0.0, 1.0 / kappa_c_sq_};
    case ContourKind::DecayingShiftLine: {
      const double p = 1.0 + eta_;
      const double base = 1.0 + std::abs(x);
      if (order == 1) {
        double sign = (x > 0.0) - (x < 0.0);
        if (x == 0.0) {
          if (approach == Approach::FromLeft) sign = -1.0;
          if (approach == Approach::FromRight) sign = 1.0;
        }
        // shift s(x) = c (1+|x|)^-p, t' = 1 - i s'
        const double ds = -p * c_ * std::pow(base, -(p + 1.0)) * sign;
        return 1.0 - kI * ds;
      }
      const double d2s = p * (p + 1.0) * c_ * std::pow(base, -(p + 2.0));
      return -kI * d2s;
    }
  }
  return {};
}

std::map<std::string, std::string> Contour::to_record() const {
  return {
      {"kind", to_string(kind_)},
      {"c", format_double(c_)},
      {"kappa_c_sq", format_double(kappa_c_sq_)},
      {"eta", format_double(eta_)},
      {"x_max", format_double(x_max_)},
  };
}

Contour Contour::from_record(const std::map<std::string, std::string>& record) {
  auto it = record.find("kind");
  if (it == record.end()) throw Error(ErrorCode::InvalidArgument, "contour record lacks 'kind'");
  const ContourKind kind = contour_kind_from_string(it->second);
  const double default_x_max = kind == ContourKind::KSParabola ? kCoulombXMax : kOscillatorXMax;
  return Contour(kind, parse_double(record, "c", 1.0), parse_double(record, "kappa_c_sq", 1.0),
                 parse_double(record, "eta", 1.0), parse_double(record, "x_max", default_x_max));
}

double check_pt_symmetry(const Contour& contour, int samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = -contour.x_max() + 2.0 * contour.x_max() * k / (samples - 1);
    const cplx t = contour.eval(x);
    const double violation = std::abs(contour.eval(-x) + std::conj(t)) / std::max(1.0, std::abs(t));
    worst = std::max(worst, violation);
  }
  return worst;
}

}  // namespace ptcl
