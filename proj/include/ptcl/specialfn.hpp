#pragma once

#include <complex>

namespace ptcl {

using cplx = std::complex<double>;

/// Generalized Laguerre polynomial L_n^(a)(z) for real a (any sign, integer or
/// not) and complex z, by the upward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+a-z) L_k - (k+a) L_{k-1},  L_0 = 1,  L_1 = 1+a-z.
cplx laguerre(int n, double a, cplx z);

/// d/dz L_n^(a)(z) = -L_{n-1}^(a+1)(z); zero for n = 0.
cplx laguerre_deriv(int n, double a, cplx z);

/// k-th derivative: (-1)^k L_{n-k}^(a+k)(z), zero when k > n.
cplx laguerre_deriv(int n, double a, cplx z, int order);

struct LaguerreEval {
  int n;
  double a;
  cplx z;
  cplx value;
  cplx first_deriv;
};

LaguerreEval laguerre_eval(int n, double a, cplx z);

}  // namespace ptcl
