#include "ptcl/ode.hpp"

#include <algorithm>
#include <cmath>

#include "ptcl/error.hpp"

namespace ptcl {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

double norm_inf(const State2& y) { return std::max(std::abs(y[0]), std::abs(y[1])); }

bool finite(const State2& y) {
  for (const cplx& v : y)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace

State2 integrate_dp45(const Rhs2& rhs, double x0, double x1, State2 y, const OdeOptions& options,
                      OdeStats* stats) {
  OdeStats local;
  OdeStats& st = stats ? *stats : local;
  if (x0 == x1) return y;

  const double direction = x1 > x0 ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);
  double h = direction * std::min(span, 1e-2 * span + 1e-3);
  double x = x0;

  auto eval = [&](double xe, const State2& ye) {
    ++st.evaluations;
    return rhs(xe, ye);
  };
  auto combine = [&](const State2& base, std::initializer_list<std::pair<double, const State2*>> terms) {
    State2 out = base;
    for (const auto& [coef, k] : terms)
      for (int i = 0; i < 2; ++i) out[i] += h * coef * (*k)[i];
    return out;
  };

  State2 k1 = eval(x, y);
  bool last_rejected = false;
  long steps = 0;
  while (direction * (x1 - x) > 0.0) {
    if (++steps > options.max_steps)
      throw Error(ErrorCode::StepUnderflow, "step budget exhausted before reaching the match point");
    if (std::abs(h) < options.min_step * std::max(1.0, std::abs(x)))
      throw Error(ErrorCode::StepUnderflow, "adaptive step fell below the minimum step size");
    if (direction * (x + h - x1) > 0.0) h = x1 - x;

    const State2 k2 = eval(x + c2 * h, combine(y, {{a21, &k1}}));
    const State2 k3 = eval(x + c3 * h, combine(y, {{a31, &k1}, {a32, &k2}}));
    const State2 k4 = eval(x + c4 * h, combine(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State2 k5 = eval(x + c5 * h, combine(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State2 k6 =
        eval(x + h, combine(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State2 y_new = combine(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double x_new = (x + h == x1 || direction * (x + h - x1) >= 0.0) ? x1 : x + h;
    const State2 k7 = eval(x_new, y_new);

    State2 err{};
    for (int i = 0; i < 2; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double scale = std::max(norm_inf(y), norm_inf(y_new));
    const double ratio = norm_inf(err) / (options.rel_tol * scale);

    if (!std::isfinite(ratio) || !finite(y_new)) {
      if (!finite(y))
        throw Error(ErrorCode::OverflowUnrecoverable, "solution left the floating-point range");
      h *= 0.2;
      last_rejected = true;
      ++st.rejected;
      continue;
    }

    if (ratio <= 1.0) {
      ++st.accepted;
      x = x_new;
      y = y_new;
      k1 = k7;
      const double size = norm_inf(y);
      if (size > options.rescale_above) {
        for (auto& v : y) v /= size;
        for (auto& v : k1) v /= size;
        ++st.rescalings;
      }
      double factor = ratio == 0.0 ? 5.0 : 0.9 * std::pow(ratio, -0.2);
      factor = std::clamp(factor, 0.2, last_rejected ? 1.0 : 5.0);
      h *= factor;
      last_rejected = false;
    } else {
      ++st.rejected;
      h *= std::clamp(0.9 * std::pow(ratio, -0.2), 0.1, 0.9);
      last_rejected = true;
    }
  }
  return y;
}

}  // namespace ptcl
