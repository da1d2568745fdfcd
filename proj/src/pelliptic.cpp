#include "pell/pelliptic.hpp"

#include <string>
#include <utility>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/quadrature.hpp"
#include "pell/summation.hpp"
#include "pelliptic_internal.hpp"
#include "power_kernel.hpp"

namespace pell {

namespace {

// t^p and 1 - t^p, both without cancellation.
std::pair<Real, Real> powers(const detail::PowerKernel& kernel, const Abscissa& n) {
  Real omtp = kernel.one_minus_pow(n.t, n.to_hi);
  Real tp = ldexp(n.t, 1) <= 1 ? kernel.pow_p(n.t) : 1 - omtp;
  return {std::move(tp), std::move(omtp)};
}

void require_open_unit(const char* what, const Real& k) {
  if (!(k > 0) || !(k < 1)) {
    throw DomainError(std::string(what) + ": k must lie in (0, 1), got " + k.to_decimal(20));
  }
}

const PExponent& quartic() {
  static const PExponent p(4);
  return p;
}

}  // namespace

namespace detail {

Real k_working(const Modulus& m, const PrecisionContext& ctx) {
  if (!(m.k() < 1)) throw DomainError("K_p: k must lie in [0, 1), got " + m.k().to_decimal(20));
  const Precision wp = ctx.working_bits();
  const PowerKernel kernel(m.p(), wp);
  const Real& kp = m.k_pow();
  const Real& kcp = m.k_comp_pow();
  auto f = [&](const Abscissa& n) {
    const Real omtp = kernel.one_minus_pow(n.t, n.to_hi);
    const Real base = kcp + kp * omtp;  // 1 - k^p t^p
    return kernel.root_p(base / omtp) / base;
  };
  return integrate_working(f, Real(wp), Real(1L, wp), ctx).value;
}

Real e_working(const Modulus& m, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const PowerKernel kernel(m.p(), wp);
  const Real& kp = m.k_pow();
  const Real& kcp = m.k_comp_pow();
  auto f = [&](const Abscissa& n) {
    const Real omtp = kernel.one_minus_pow(n.t, n.to_hi);
    return kernel.root_p((kcp + kp * omtp) / omtp);
  };
  return integrate_working(f, Real(wp), Real(1L, wp), ctx).value;
}

namespace {

template <bool kSecond>
Real ij_working(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx) {
  if (!(a > 0) || !(b > 0)) throw DomainError("I_p/J_p: a and b must be positive");
  const Precision wp = ctx.working_bits();
  const PowerKernel kernel(p, wp);
  const Real ap = kernel.pow_p(a.rounded(wp));
  const Real bp = kernel.pow_p(b.rounded(wp));
  auto f = [&](const Abscissa& n) {
    const auto [tp, omtp] = powers(kernel, n);
    const Real base = ap * omtp + bp * tp;
    if constexpr (kSecond) {
      return kernel.root_p(base / omtp);
    } else {
      return kernel.root_p(base / omtp) / base;
    }
  };
  return integrate_working(f, Real(wp), Real(1L, wp), ctx).value;
}

}  // namespace

Real i_working(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx) {
  return ij_working<false>(a, b, p, ctx);
}

Real j_working(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx) {
  return ij_working<true>(a, b, p, ctx);
}

Real dk_from(const Modulus& m, const Real& k_val, const Real& e_val) {
  return (e_val - m.k_comp_pow() * k_val) / (m.k() * m.k_comp_pow());
}

Real de_from(const Modulus& m, const Real& k_val, const Real& e_val) {
  return (e_val - k_val) / m.k();
}

Real half_pi_p(const PExponent& p, Precision wp) {
  const Real pi_w = pi(wp);
  const Real p_w(p.value(), wp);
  return pi_w / (p_w * sin(pi_w / p_w));
}

}  // namespace detail

Modulus::Modulus(const PExponent& p, const Real& k, const PrecisionContext& ctx)
    : p_(p), k_(k, ctx.working_bits()), k_comp_(ctx.working_bits()),
      k_pow_(ctx.working_bits()), k_comp_pow_(ctx.working_bits()) {
  if (k_.sign() < 0 || k_ > 1 || !k_.is_finite()) {
    throw DomainError("modulus k must lie in [0, 1], got " + k.to_decimal(20));
  }
  const detail::PowerKernel kernel(p_, ctx.working_bits());
  k_pow_ = kernel.pow_p(k_);
  k_comp_pow_ = 1 - k_pow_;
  k_comp_ = kernel.root_p(k_comp_pow_);
}

Modulus Modulus::with_complement(const PExponent& p, const Real& k, const Real& k_comp,
                                 const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  Real k_w(k, wp);
  Real kc_w(k_comp, wp);
  if (k_w.sign() < 0 || k_w > 1 || kc_w.sign() < 0 || kc_w > 1) {
    throw DomainError("modulus pair must lie in [0, 1]");
  }
  const detail::PowerKernel kernel(p, wp);
  Real kp = kernel.pow_p(k_w);
  Real kcp = kernel.pow_p(kc_w);
  return Modulus(p, std::move(k_w), std::move(kc_w), std::move(kp), std::move(kcp));
}

Modulus Modulus::complementary() const { return Modulus(p_, k_comp_, k_, k_comp_pow_, k_pow_); }

Real elliptic_k(const Modulus& m, const PrecisionContext& ctx) {
  return ctx.finish(detail::k_working(m, ctx));
}

Real elliptic_e(const Modulus& m, const PrecisionContext& ctx) {
  return ctx.finish(detail::e_working(m, ctx));
}

Real integral_i(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx) {
  return ctx.finish(detail::i_working(a, b, p, ctx));
}

Real integral_j(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx) {
  return ctx.finish(detail::j_working(a, b, p, ctx));
}

Real elliptic_k_derivative(const Modulus& m, const PrecisionContext& ctx) {
  require_open_unit("dK_p/dk", m.k());
  return ctx.finish(detail::dk_from(m, detail::k_working(m, ctx), detail::e_working(m, ctx)));
}

Real elliptic_e_derivative(const Modulus& m, const PrecisionContext& ctx) {
  require_open_unit("dE_p/dk", m.k());
  return ctx.finish(detail::de_from(m, detail::k_working(m, ctx), detail::e_working(m, ctx)));
}

Real fd_step(const PrecisionContext& ctx) { return pow2(-ctx.bits() / 3, ctx.working_bits()); }

IdentityReport ode_residual(OdeSolution which, const Modulus& m, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real margin = pow2(-ctx.bits() / 4, wp);
  const Real& k = m.k();
  if (k < margin || k > 1 - margin) {
    throw DomainError("ode_residual: k must stay 2^(-bits/4) away from 0 and 1");
  }
  const PExponent& p = m.p();
  const Real p_w(p.value(), wp);
  const bool primed = which == OdeSolution::kKPrime || which == OdeSolution::kEPrimeMinusKPrime;

  // y and y' of the selected solution at modulus `at`.
  auto evaluate = [&](const Modulus& at) -> std::pair<Real, Real> {
    const Modulus& base = primed ? at.complementary() : at;
    const Real kv = detail::k_working(base, ctx);
    const Real ev = detail::e_working(base, ctx);
    const Real dk = detail::dk_from(base, kv, ev);
    const Real de = detail::de_from(base, kv, ev);
    // d k'/dk = -k^(p-1) / k'^(p-1)
    const Real chain = primed ? -(at.k_pow() / at.k()) / (at.k_comp_pow() / at.k_comp()) : Real(1L, wp);
    switch (which) {
      case OdeSolution::kK:
      case OdeSolution::kKPrime:
        return {kv, dk * chain};
      case OdeSolution::kE:
        return {ev, de};
      case OdeSolution::kEPrimeMinusKPrime:
        return {ev - kv, (de - dk) * chain};
    }
    return {Real(wp), Real(wp)};
  };

  const Real h = fd_step(ctx);
  const auto [y, dy] = evaluate(m);
  const Real dy_plus = evaluate(Modulus(p, k + h, ctx)).second;
  const Real dy_minus = evaluate(Modulus(p, k - h, ctx)).second;
  const Real d2y = ldexp(dy_plus - dy_minus, -1) / h;

  const Real& kp = m.k_pow();
  const Real k_pm1 = kp / k;
  const Real lead = k * m.k_comp_pow() * d2y;
  Real residual(wp);
  IdentityId id = IdentityId::kOdeK;
  switch (which) {
    case OdeSolution::kK:
    case OdeSolution::kKPrime:
      residual = lead + (1 - (p_w + 1) * kp) * dy - (p_w - 1) * k_pm1 * y;
      id = which == OdeSolution::kK ? IdentityId::kOdeK : IdentityId::kOdeKPrime;
      break;
    case OdeSolution::kE:
    case OdeSolution::kEPrimeMinusKPrime:
      residual = lead + m.k_comp_pow() * dy + k_pm1 * y;
      id = which == OdeSolution::kE ? IdentityId::kOdeE : IdentityId::kOdeEPrimeMinusKPrime;
      break;
  }
  const Real tol = kOdeToleranceConstant * h * h;
  return make_report(id, {{"p", p_w}, {"k", k}}, residual, Real(wp), tol, ctx);
}

IdentityReport legendre_defect(const PExponent& p, const Real& k, const PrecisionContext& ctx) {
  require_open_unit("legendre", k);
  const Precision wp = ctx.working_bits();
  const Modulus m(p, k, ctx);
  const Modulus mc = m.complementary();
  const Real kk = detail::k_working(m, ctx);
  const Real ek = detail::e_working(m, ctx);
  const Real kc = detail::k_working(mc, ctx);
  const Real ec = detail::e_working(mc, ctx);
  const Real lhs = kc * ek + kk * ec - kk * kc;
  return make_report(IdentityId::kLegendre, {{"p", Real(p.value(), wp)}, {"k", m.k()}}, lhs,
                     detail::half_pi_p(p, wp), 8 * ctx.quad_tol(), ctx);
}

Real series_tol(const PrecisionContext& ctx) { return ctx.ulps(8); }

namespace detail {

Real hyp2f1_working(const Real& a, const Real& b, const Real& c, const Real& x,
                    const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  if (c.sign() <= 0 && c.is_integer()) {
    throw DomainError("hyp2f1: c must not be a non-positive integer");
  }
  if (x.sign() < 0 || !(x < 1)) {
    throw DomainError("hyp2f1: x must lie in [0, 1), got " + x.to_decimal(20));
  }
  const Real a_w(a, wp);
  const Real b_w(b, wp);
  const Real c_w(c, wp);
  const Real x_w(x, wp);
  const Real tail_factor = 1 / (1 - x_w);
  const Real cutoff = pow2(-ctx.bits() - 8, wp);

  OrderedSum sum(wp);
  Real term(1L, wp);
  sum.add(term);
  for (long n = 0; n < kHypergeometricTermCap; ++n) {
    term *= (a_w + n) * (b_w + n) / ((c_w + n) * (n + 1)) * x_w;
    sum.add(term);
    if (term.is_zero() || abs(term) * tail_factor < cutoff) return sum.value();
  }
  throw NonConvergence("hyp2f1: series did not converge within the term cap");
}

}  // namespace detail

Real hyp2f1(const Real& a, const Real& b, const Real& c, const Real& x,
            const PrecisionContext& ctx) {
  return ctx.finish(detail::hyp2f1_working(a, b, c, x, ctx));
}

IdentityReport hypergeometric_check(bool second_kind, const Modulus& m,
                                    const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  if (m.k_pow() > Real(0.75, wp)) {
    throw DomainError("hypergeometric_check: needs k^p <= 3/4");
  }
  const Real p_w(m.p().value(), wp);
  const Real inv_p = 1 / p_w;
  const Real lhs = second_kind ? detail::e_working(m, ctx) : detail::k_working(m, ctx);
  const Real b = second_kind ? -inv_p : 1 - inv_p;
  const Real rhs = detail::half_pi_p(m.p(), wp) *
                   detail::hyp2f1_working(inv_p, b, Real(1L, wp), m.k_pow(), ctx);
  const Real tol = 8 * max(ctx.quad_tol(), series_tol(ctx));
  return make_report(second_kind ? IdentityId::kHypergeometricE : IdentityId::kHypergeometricK,
                     {{"p", p_w}, {"k", m.k()}}, lhs, rhs, tol, ctx);
}

IdentityReport landen_check(LandenForm which, const Real& k_in, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real k(k_in, wp);
  if (k.sign() < 0 || !(k < 1)) {
    throw DomainError("landen_check: k must lie in [0, 1), got " + k_in.to_decimal(20));
  }
  const PExponent& p = quartic();
  const Modulus m(p, k, ctx);
  const Real& kc = m.k_comp();
  const Real k2 = k * k;
  const Real kc2 = kc * kc;
  // 1 - k^2 without cancellation.
  const Real one_minus_k2 = m.k_comp_pow() / (1 + k2);
  const Real s = sqrt(1 + 3 * k2);
  const Real sc = sqrt(1 + 3 * kc2);

  auto l1 = [&] {
    const Real l = nth_root(8 * (1 + k2) * k2, 4) / s;
    const Real lc = kc2 / sqrt((1 + k2) * (1 + 3 * k2));
    return Modulus::with_complement(p, l, lc, ctx);
  };
  auto l2 = [&] {
    const Real l = k2 / sqrt((1 + kc2) * (1 + 3 * kc2));
    const Real lc = nth_root(8 * (1 + kc2) * kc2, 4) / sc;
    return Modulus::with_complement(p, l, lc, ctx);
  };

  Real lhs(wp);
  Real rhs(wp);
  IdentityId id = IdentityId::kLandenI;
  switch (which) {
    case LandenForm::kI:
      lhs = detail::k_working(m, ctx);
      rhs = detail::k_working(l1(), ctx) / s;
      id = IdentityId::kLandenI;
      break;
    case LandenForm::kII:
      lhs = detail::k_working(m, ctx);
      rhs = 2 * detail::k_working(l2(), ctx) / sc;
      id = IdentityId::kLandenII;
      break;
    case LandenForm::kIII:
      lhs = detail::e_working(m, ctx);
      rhs = ldexp(s * detail::e_working(l1(), ctx) + one_minus_k2 * detail::k_working(m, ctx), -1);
      id = IdentityId::kLandenIII;
      break;
    case LandenForm::kIV:
      lhs = detail::e_working(m, ctx);
      rhs = sc * detail::e_working(l2(), ctx) - kc2 * detail::k_working(m, ctx);
      id = IdentityId::kLandenIV;
      break;
  }
  return make_report(id, {{"k", k}}, lhs, rhs, 8 * ctx.quad_tol(), ctx);
}

IdentityReport ramanujan_defect(const Real& x_in, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real x(x_in, wp);
  if (x.sign() < 0 || x > Real(0.5, wp)) {
    throw DomainError("ramanujan_defect: x must lie in [0, 1/2], got " + x_in.to_decimal(20));
  }
  const Real a = ldexp(Real(1L, wp), -2);
  const Real b = 3 * a;
  const Real one(1L, wp);
  const Real q = 1 + 3 * x;
  // 1 - ((1-x)/(1+3x))^2 = 8x(1+x)/(1+3x)^2
  const Real lhs_arg = 8 * x * (1 + x) / (q * q);
  const Real lhs = detail::hyp2f1_working(a, b, one, lhs_arg, ctx);
  const Real rhs = sqrt(q) * detail::hyp2f1_working(a, b, one, x * x, ctx);
  return make_report(IdentityId::kRamanujan, {{"x", x}}, lhs, rhs, series_tol(ctx), ctx);
}

}  // namespace pell
