#include "pell/agm.hpp"

#include <string>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/pelliptic.hpp"
#include "pell/summation.hpp"
#include "pelliptic_internal.hpp"

namespace pell {

namespace {

void require_ordered(const Real& a, const Real& b) {
  if (!(b > 0) || a < b) {
    throw DomainError("mean iteration needs a >= b > 0, got a = " + a.to_decimal(20) +
                      ", b = " + b.to_decimal(20));
  }
}

// c from its defining difference; used for row 0 only.
Real direct_c(MeanKind kind, const Real& a, const Real& b) {
  const Real diff = a - b;
  switch (kind) {
    case MeanKind::kP2:
      return sqrt(diff * (a + b));
    case MeanKind::kP3:
      return cbrt(diff * (a * a + a * b + b * b));
    case MeanKind::kP4:
      return nth_root(diff * (a + b) * (a * a + b * b), 4);
  }
  return Real(a.prec());
}

std::pair<Real, Real> advance(MeanKind kind, const Real& a, const Real& b, int steps) {
  std::pair<Real, Real> ab{a, b};
  for (int i = 0; i < steps; ++i) ab = mean_step(kind, ab.first, ab.second);
  return ab;
}

const PExponent& quartic() {
  static const PExponent p(4);
  return p;
}

}  // namespace

long exponent_of(MeanKind kind) {
  switch (kind) {
    case MeanKind::kP2: return 2;
    case MeanKind::kP3: return 3;
    case MeanKind::kP4: return 4;
  }
  return 0;
}

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::kP2: return "p2";
    case MeanKind::kP3: return "p3";
    case MeanKind::kP4: return "p4";
  }
  return "unknown";
}

Real AgmTrace::kappa(std::size_t n) const {
  if (kind_ != MeanKind::kP4) throw DomainError("kappa is defined for P4 traces only");
  return rows_.at(n).c / rows_.at(n).a;
}

Real step_c(MeanKind kind, const Real& a, const Real& b) {
  switch (kind) {
    case MeanKind::kP2:
      return ldexp(a - b, -1);
    case MeanKind::kP3:
      return (a - b) / 3;
    case MeanKind::kP4:
      return ldexp(sqrt((a - b) * (a + b)), -1);
  }
  return Real(a.prec());
}

std::pair<Real, Real> mean_step(MeanKind kind, const Real& a, const Real& b) {
  require_ordered(a, b);
  Real next_a(a.prec());
  Real next_b(a.prec());
  switch (kind) {
    case MeanKind::kP2:
      next_a = ldexp(a + b, -1);
      next_b = sqrt(a * b);
      break;
    case MeanKind::kP3:
      next_a = (a + 2 * b) / 3;
      next_b = cbrt((a * a + a * b + b * b) * b / 3);
      break;
    case MeanKind::kP4: {
      const Real b2 = b * b;
      next_a = sqrt(ldexp(a * a + 3 * b2, -2));
      next_b = nth_root(ldexp((a * a + b2) * b2, -1), 4);
      break;
    }
  }
  // Once a ~ b the two roundings may cross by an ulp.
  if (next_b > next_a) next_b = next_a;
  return {std::move(next_a), std::move(next_b)};
}

AgmTrace run_mean(MeanKind kind, const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
  require_ordered(a_in, b_in);
  const Precision wp = ctx.working_bits();
  Real a(a_in, wp);
  Real b(b_in, wp);
  const Real threshold = ldexp(a, 4 - ctx.bits());

  std::vector<TraceRow> rows;
  rows.push_back({0, a, b, direct_c(kind, a, b)});
  for (long n = 1; !(a - b < threshold); ++n) {
    if (n > ctx.max_iters()) {
      throw NonConvergence("mean iteration did not converge in " +
                           std::to_string(ctx.max_iters()) + " steps");
    }
    Real c = step_c(kind, a, b);
    auto [next_a, next_b] = mean_step(kind, a, b);
    a = std::move(next_a);
    b = std::move(next_b);
    rows.push_back({n, a, b, std::move(c)});
  }
  Real next_c = step_c(kind, a, b);
  return AgmTrace(kind, std::move(rows), std::move(next_c));
}

IdentityReport homogeneity_check(MeanKind kind, const Real& a, const Real& b, const Real& c,
                                 const PrecisionContext& ctx) {
  if (!(c > 0)) throw DomainError("homogeneity_check: c must be positive");
  const Precision wp = ctx.working_bits();
  const Real c_w(c, wp);
  const Real lhs = run_mean(kind, c_w * a, c_w * b, ctx).limit();
  const Real rhs = c_w * run_mean(kind, a, b, ctx).limit();
  const Real tol = ctx.ulps(8) * max(Real(1L, wp), abs(rhs));
  return make_report(IdentityId::kHomogeneity, {{"a", a}, {"b", b}, {"c", c_w}}, lhs, rhs, tol,
                     ctx);
}

IdentityReport invariance_check(MeanKind kind, const Real& a, const Real& b, int n_steps,
                                const PrecisionContext& ctx) {
  if (n_steps < 1) throw DomainError("invariance_check: n_steps must be at least 1");
  const Precision wp = ctx.working_bits();
  const Real a0(a, wp);
  const Real b0(b, wp);
  const PExponent p(exponent_of(kind));
  const auto [an, bn] = advance(kind, a0, b0, n_steps);

  auto weight = [kind](const Real& x) {
    switch (kind) {
      case MeanKind::kP2: return Real(1L, x.prec());
      case MeanKind::kP3: return x;
      case MeanKind::kP4: return x * x;
    }
    return x;
  };
  const Real lhs = weight(an) * detail::i_working(an, bn, p, ctx);
  const Real rhs = weight(a0) * detail::i_working(a0, b0, p, ctx);
  return make_report(IdentityId::kInvariance,
                     {{"p", Real(exponent_of(kind), wp)}, {"a", a0}, {"b", b0},
                      {"n", Real(static_cast<long>(n_steps), wp)}},
                     lhs, rhs, 8 * ctx.quad_tol(), ctx);
}

IdentityReport contraction_check(const AgmTrace& trace, const PrecisionContext& ctx) {
  if (trace.kind() != MeanKind::kP4) {
    throw DomainError("contraction_check applies to P4 traces");
  }
  const auto& rows = trace.rows();
  const Precision wp = ctx.working_bits();
  auto gap = [](const TraceRow& r) { return (r.a - r.b) * (r.a + r.b); };
  Real excess(wp);  // max(0, worst excess over the bound)
  for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
    const Real over = gap(rows[n + 1]) - ldexp(gap(rows[n]), -2);
    if (over > excess) excess = over;
  }
  const Real& a0 = rows.front().a;
  const Real slack = ctx.ulps(8) * a0 * a0;
  return make_report(IdentityId::kContraction,
                     {{"a", a0}, {"b", rows.front().b},
                      {"steps", Real(static_cast<long>(rows.size()) - 1, wp)}},
                     excess, Real(wp), slack, ctx);
}

IdentityReport lemma_ij_check(const Real& a, const Real& b, int n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("lemma_ij_check: n must be non-negative");
  const Precision wp = ctx.working_bits();
  const Real a0(a, wp);
  const Real b0(b, wp);
  const auto [an, bn] = advance(MeanKind::kP4, a0, b0, n);
  const auto [an1, bn1] = mean_step(MeanKind::kP4, an, bn);
  const PExponent& p = quartic();
  const Real lhs = 2 * detail::j_working(an1, bn1, p, ctx) - detail::j_working(an, bn, p, ctx);
  const Real rhs = an * an * bn * bn * detail::i_working(an, bn, p, ctx);
  return make_report(IdentityId::kLemmaIJ,
                     {{"a", a0}, {"b", b0}, {"n", Real(static_cast<long>(n), wp)}}, lhs, rhs,
                     8 * ctx.quad_tol(), ctx);
}

IdentityReport prop_ek_check(const Real& a, const Real& b, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real a0(a, wp);
  const Real b0(b, wp);
  const AgmTrace trace = run_mean(MeanKind::kP4, a0, b0, ctx);
  const Real a2 = a0 * a0;
  const Real a4 = a2 * a2;
  const Real threshold = ldexp(a4, 4 - ctx.bits());

  OrderedSum series(wp);
  bool converged = false;
  const auto& rows = trace.rows();
  for (std::size_t n = 1; n <= rows.size() && !converged; ++n) {
    const Real& c = n < rows.size() ? rows[n].c : trace.next_c();
    const Real term = ldexp(c * c, static_cast<long>(n));
    series.add(term);
    converged = term < threshold;
  }
  if (!converged) {
    throw NonConvergence("prop_ek_check: series terms did not fall below threshold");
  }
  const PExponent& p = quartic();
  const Real lhs = detail::j_working(a0, b0, p, ctx);
  const Real rhs = (a4 - a2 * series.value()) * detail::i_working(a0, b0, p, ctx);
  return make_report(IdentityId::kPropEK, {{"a", a0}, {"b", b0}}, lhs, rhs,
                     16 * ctx.quad_tol(), ctx);
}

IdentityReport gauss_formula_check(MeanKind kind, const Real& k, const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const PExponent p(exponent_of(kind));
  const Modulus m(p, k, ctx);
  const Real lhs = detail::k_working(m, ctx);
  const Real rhs = detail::half_pi_p(p, wp) / run_mean(kind, Real(1L, wp), m.k_comp(), ctx).limit();
  IdentityId id = IdentityId::kGaussP2;
  if (kind == MeanKind::kP3) id = IdentityId::kK3Formula;
  if (kind == MeanKind::kP4) id = IdentityId::kK4Formula;
  return make_report(id, {{"k", m.k()}}, lhs, rhs, 8 * ctx.quad_tol(), ctx);
}

}  // namespace pell
