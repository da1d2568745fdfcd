#include "pell/ptrig.hpp"

#include <string>
#include <utility>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/quadrature.hpp"
#include "power_kernel.hpp"

namespace pell {

namespace {

constexpr long kSeedBits = 64;

Real half_period(const detail::PowerKernel& k, Precision wp) {
  const Real pi_w = pi(wp);
  return 2 * pi_w / (k.p() * sin(pi_w / k.p()));
}

// arcsin_p at working precision; `quarter` is pi_p / 2.
Real arcsin_working(const Real& x, const detail::PowerKernel& kernel, const Real& quarter,
                    const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  if (x.is_zero()) return Real(wp);
  if (x == 1) return quarter;

  const Real x_w = x.rounded(wp);
  if (ldexp(kernel.pow_p(x_w), 1) <= 1) {
    auto f = [&kernel](const Abscissa& n) {
      return 1 / kernel.root_p(kernel.one_minus_pow(n.t, 1 - n.t));
    };
    return detail::integrate_working(f, Real(wp), x_w, ctx).value;
  }
  auto tail = [&kernel](const Abscissa& n) {
    return 1 / kernel.root_p(kernel.one_minus_pow(n.t, n.to_hi));
  };
  return quarter - detail::integrate_working(tail, x_w, Real(1L, wp), ctx).value;
}

Real sin_working(const Real& theta, const PExponent& p, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const detail::PowerKernel kernel(p, wp);
  const Real quarter = ldexp(half_period(kernel, wp), -1);

  if (theta.sign() < 0 || theta > quarter * (1 + ctx.ulps(4))) {
    throw DomainError("sin_p: theta must lie in [0, pi_p/2], got " + theta.to_decimal(20));
  }
  if (theta.is_zero()) return Real(wp);
  // Within 2^(-bits) of the endpoint, 1 - sin_p(theta) is below an ulp of the result.
  if (theta >= quarter * (1 - ctx.ulps(0))) return Real(1L, wp);

  const Real target = theta.rounded(wp);
  const Real tol_g = ldexp(quarter, 9 - static_cast<long>(wp));  // 2^(8 - wp) pi_p
  const Real tol_s = pow2(2 - static_cast<long>(wp), wp);

  Real s(wp);
  if (ctx.bits() > kSeedBits) {
    const PrecisionContext seed(kSeedBits);
    s = Real(sin_working(Real(theta, seed.working_bits()), p, seed), wp);
  } else {
    // p = 2 shape as the starting guess.
    s = sin(ldexp(target * pi(wp) / quarter, -1));
  }
  Real lo(wp);
  Real hi(1L, wp);
  if (!(s > lo && s < hi)) s = ldexp(hi, -1);

  const long max_steps = ctx.max_iters() + static_cast<long>(wp);
  for (long iter = 0; iter < max_steps; ++iter) {
    const Real g = arcsin_working(s, kernel, quarter, ctx) - target;
    if (abs(g) < tol_g) return s;
    if (g.sign() > 0) {
      hi = s;
    } else {
      lo = s;
    }
    // Halley step with g' = (1 - s^p)^(-1/p), g'' = s^(p-1) (1 - s^p)^(-1/p-1).
    const Real omp = kernel.one_minus_pow(s, 1 - s);
    const Real d1 = 1 / kernel.root_p(omp);
    const Real d2 = d1 * kernel.pow_p(s) / (s * omp);
    const Real denom = 2 * d1 * d1 - g * d2;
    Real next = denom > 0 ? s - 2 * g * d1 / denom : s - g / d1;
    if (!(next > lo && next < hi)) next = ldexp(lo + hi, -1);
    if (abs(next - s) <= tol_s) {
      const Real residual = arcsin_working(next, kernel, quarter, ctx) - target;
      if (abs(residual) < ldexp(quarter, 9 - ctx.bits())) return next;
      break;
    }
    s = std::move(next);
  }
  throw NonConvergence("sin_p: Newton iteration did not converge for theta = " +
                       theta.to_decimal(20));
}

}  // namespace

PExponent::PExponent(Real p) : p_(std::move(p)) {
  if (!p_.is_finite() || !(p_ > 1)) {
    throw DomainError("p must satisfy 1 < p < inf, got " + p_.to_decimal(17));
  }
  if (p_.is_integer() && p_ <= 64) integer_ = p_.to_long();
}

Real pi_p(const PExponent& p, const PrecisionContext& ctx) {
  const detail::PowerKernel kernel(p, ctx.working_bits());
  return ctx.finish(half_period(kernel, ctx.working_bits()));
}

Real arcsin_p(const Real& x, const PExponent& p, const PrecisionContext& ctx) {
  if (x.sign() < 0 || x > 1) {
    throw DomainError("arcsin_p: x must lie in [0, 1], got " + x.to_decimal(20));
  }
  const Precision wp = ctx.working_bits();
  const detail::PowerKernel kernel(p, wp);
  const Real quarter = ldexp(half_period(kernel, wp), -1);
  return ctx.finish(arcsin_working(x, kernel, quarter, ctx));
}

Real sin_p(const Real& theta, const PExponent& p, const PrecisionContext& ctx) {
  return ctx.finish(sin_working(theta, p, ctx));
}

Real cos_p(const Real& theta, const PExponent& p, const PrecisionContext& ctx) {
  const Real s = sin_working(theta, p, ctx);
  const detail::PowerKernel kernel(p, ctx.working_bits());
  return ctx.finish(kernel.root_p(kernel.one_minus_pow(s, 1 - s)));
}

}  // namespace pell
