#pragma once

#include <array>
#include <complex>
#include <functional>

namespace ptcl {

using cplx = std::complex<double>;
using State2 = std::array<cplx, 2>;
using Rhs2 = std::function<State2(double, const State2&)>;

struct OdeOptions {
  double rel_tol = 1e-10;          ///< local error per step relative to the solution scale
  double min_step = 1e-14;         ///< relative to max(1, |x|)
  long max_steps = 5'000'000;
  double rescale_above = 1e100;    ///< state is renormalized when its norm exceeds this
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
  int rescalings = 0;
};

/// Adaptive Dormand-Prince 5(4) integration of a linear homogeneous complex
/// system from x0 to x1 (either direction). The returned state is defined up
/// to the overall factor removed by rescaling.
State2 integrate_dp45(const Rhs2& rhs, double x0, double x1, State2 y0, const OdeOptions& options,
                      OdeStats* stats = nullptr);

}  // namespace ptcl
