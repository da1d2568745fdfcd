#pragma once

#include "pell/real.hpp"

// Elementary functions at the precision of their argument. MPFR rounds each
// result correctly, so every value is within half an ulp. Violated domains
// throw DomainError instead of producing NaN.
namespace pell {

Real pi(Precision prec);

Real sqrt(const Real& x);                 // x >= 0
Real cbrt(const Real& x);
Real nth_root(const Real& x, unsigned long n);  // x >= 0, n >= 1
Real pow(const Real& x, const Real& y);   // x > 0, or x == 0 with y > 0
Real pow(const Real& x, long n);          // integer power; x != 0 when n < 0
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);                  // x > 0
Real log1p(const Real& x);                // x > -1
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);

}  // namespace pell
