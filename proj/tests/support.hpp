#pragma once

#include <doctest.h>

#include <cmath>
#include <string>

#include "pell/precision.hpp"
#include "pell/real.hpp"

namespace pell::test {

// n-th root by Newton's method using only +, *, /. Independent of the
// library's root functions.
inline Real newton_root(const Real& x, long n, Precision prec) {
  Real y(std::pow(x.to_double(), 1.0 / static_cast<double>(n)), prec);
  const Real x_w(x, prec);
  for (int iter = 0; iter < 200; ++iter) {
    Real y_pow(1L, prec);
    for (long i = 0; i < n - 1; ++i) y_pow *= y;
    Real next = ((n - 1) * y + x_w / y_pow) / n;
    if (next == y) break;
    y = std::move(next);
  }
  return y;
}

inline Real ulps(const PrecisionContext& ctx, long offset) { return ctx.ulps(offset); }

inline std::string show(const Real& x) { return x.to_decimal(25); }

}  // namespace pell::test

// CHECK that |a - b| <= tol, printing both values on failure.
#define CHECK_CLOSE(a, b, tol)                                                         \
  do {                                                                                 \
    const ::pell::Real check_close_diff_ = ::pell::abs((a) - (b));                     \
    INFO("lhs = ", ::pell::test::show(a), ", rhs = ", ::pell::test::show(b),            \
         ", |diff| = ", check_close_diff_.to_scientific(3), ", tol = ",                \
         ::pell::Real(tol).to_scientific(3));                                          \
    CHECK(check_close_diff_ <= (tol));                                                 \
  } while (false)
