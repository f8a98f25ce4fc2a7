#include "ptcl/specialfn.hpp"

#include "ptcl/error.hpp"

namespace ptcl {

cplx laguerre(int n, double a, cplx z) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Laguerre degree must be non-negative");
  cplx prev{1.0, 0.0};
  if (n == 0) return prev;
  cplx curr = 1.0 + a - z;
  for (int k = 1; k < n; ++k) {
    const cplx next = ((2.0 * k + 1.0 + a - z) * curr - (k + a) * prev) / double(k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

cplx laguerre_deriv(int n, double a, cplx z) { return laguerre_deriv(n, a, z, 1); }

cplx laguerre_deriv(int n, double a, cplx z, int order) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Laguerre degree must be non-negative");
  if (order < 0) throw Error(ErrorCode::UnsupportedOrder, "negative derivative order");
  if (order > n) return {0.0, 0.0};
  const cplx value = laguerre(n - order, a + order, z);
  return order % 2 == 0 ? value : -value;
}

LaguerreEval laguerre_eval(int n, double a, cplx z) {
  return {n, a, z, laguerre(n, a, z), laguerre_deriv(n, a, z)};
}

}  // namespace ptcl
