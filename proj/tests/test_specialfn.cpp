#include <doctest.h>

#include "oracles.hpp"
#include "ptcl/specialfn.hpp"

using namespace ptcl;
using doctest::Approx;

TEST_CASE("reference values") {
  CHECK(laguerre(0, -0.7, {3.0, 2.0}) == cplx{1.0, 0.0});
  CHECK(laguerre(2, 0.0, 2.0) == cplx{-1.0, 0.0});
  CHECK(laguerre(3, -0.5, 0.0).real() == Approx(0.3125).epsilon(1e-15));
  CHECK(oracle::rel_err(laguerre(1, 0.4, {1.0, 1.0}), cplx{0.4, -1.0}) <= 1e-15);

  // frozen from a hypergeometric evaluation at 40 digits
  CHECK(oracle::rel_err(laguerre(5, -2.3, {1.2, 0.8}), {0.20138125000000004, -0.24468066666666666}) <= 1e-13);
  // negative-integer upper parameter stays finite
  CHECK(oracle::rel_err(laguerre(4, -3.0, {2.0, -1.0}), {-0.625, 0.83333333333333333}) <= 1e-14);
}

TEST_CASE("derivative") {
  CHECK(laguerre_deriv(0, 1.3, {2.0, 5.0}) == cplx{0.0, 0.0});
  CHECK(laguerre_deriv(1, 0.0, 5.0) == cplx{-1.0, 0.0});

  const cplx z{1.0, 1.0};
  const cplx fd = oracle::central_difference([](cplx w) { return laguerre(2, 1.0, w); }, z, 1e-6);
  CHECK(oracle::rel_err(laguerre_deriv(2, 1.0, z), fd) <= 1e-9);

  CHECK(laguerre_deriv(3, 0.2, z, 4) == cplx{0.0, 0.0});
  CHECK(laguerre_deriv(3, 0.2, z, 0) == laguerre(3, 0.2, z));

  const LaguerreEval e = laguerre_eval(4, -1.5, z);
  CHECK(e.value == laguerre(4, -1.5, z));
  CHECK(e.first_deriv == -laguerre(3, -0.5, z));
}

TEST_CASE("property: recurrence agrees with explicit expansion") {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = trial % 7;
    const double a = oracle::uniform(-3.0, 3.0);
    const cplx z{oracle::uniform(-5.0, 5.0), oracle::uniform(-5.0, 5.0)};
    const cplx want = oracle::laguerre_monomial(n, a, z);
    const cplx got = laguerre(n, a, z);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(std::abs(want), 1.0));
  }
}

TEST_CASE("property: conjugation, zero argument, derivative") {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 9;
    const double a = oracle::uniform(-3.0, 3.0);
    const cplx z{oracle::uniform(-5.0, 5.0), oracle::uniform(-5.0, 5.0)};

    const cplx value = laguerre(n, a, z);
    CHECK(std::abs(laguerre(n, a, std::conj(z)) - std::conj(value)) <= 1e-14 * std::max(1.0, std::abs(value)));

    const double zero = oracle::laguerre_at_zero(n, a);
    CHECK(std::abs(laguerre(n, a, 0.0).real() - zero) <= 1e-13 * std::max(std::abs(zero), 1e-3));

    const cplx fd = oracle::central_difference([&](cplx w) { return laguerre(n, a, w); }, z, 1e-5);
    const cplx d = laguerre_deriv(n, a, z);
    CHECK(std::abs(d - fd) <= 1e-8 * std::max(1.0, std::abs(d)));
  }
}
