#include "pell/elementary.hpp"

#include <algorithm>
#include <string>

#include "pell/errors.hpp"

namespace pell {

namespace {

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(Unary fn, const Real& x) {
  Real r(x.prec());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

[[noreturn]] void domain(const char* fn, const Real& x) {
  throw DomainError(std::string(fn) + ": argument out of domain (" + x.to_decimal(17) + ")");
}

}  // namespace

Real pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) domain("sqrt", x);
  return apply(mpfr_sqrt, x);
}

Real cbrt(const Real& x) { return apply(mpfr_cbrt, x); }

Real nth_root(const Real& x, unsigned long n) {
  if (n == 0) throw DomainError("nth_root: root index must be positive");
  if (x.sign() < 0) domain("nth_root", x);
  Real r(x.prec());
  mpfr_rootn_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  if (x.sign() < 0 || (x.is_zero() && y.sign() <= 0)) domain("pow", x);
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  if (x.is_zero() && n < 0) domain("pow", x);
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) { return apply(mpfr_exp, x); }
Real expm1(const Real& x) { return apply(mpfr_expm1, x); }

Real log(const Real& x) {
  if (x.sign() <= 0) domain("log", x);
  return apply(mpfr_log, x);
}

Real log1p(const Real& x) {
  if (!(x > -1)) domain("log1p", x);
  return apply(mpfr_log1p, x);
}

Real sin(const Real& x) { return apply(mpfr_sin, x); }
Real cos(const Real& x) { return apply(mpfr_cos, x); }
Real sinh(const Real& x) { return apply(mpfr_sinh, x); }
Real cosh(const Real& x) { return apply(mpfr_cosh, x); }
Real tanh(const Real& x) { return apply(mpfr_tanh, x); }
Real asinh(const Real& x) { return apply(mpfr_asinh, x); }

}  // namespace pell
