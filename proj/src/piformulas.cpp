#include "pell/piformulas.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/summation.hpp"

namespace pell {

namespace {

struct Setup {
  MeanKind kind;
  long start_root;  // b_0 = 2^(-1/start_root)
};

Setup setup_for(PiMethod method) {
  switch (method) {
    case PiMethod::kSalaminBrent: return {MeanKind::kP2, 2};
    case PiMethod::kPi3: return {MeanKind::kP3, 3};
    case PiMethod::kPi4:
    case PiMethod::kPiViaPi4: return {MeanKind::kP4, 4};
    case PiMethod::kMachin: break;
  }
  throw DomainError("the Machin method has no mean iteration");
}

Real start_b(const Setup& s, Precision wp) {
  return 1 / nth_root(Real(2L, wp), s.start_root);
}

Real series_term(MeanKind kind, long n, const Real& a, const Real& c) {
  if (kind == MeanKind::kP3) {
    return 2 * pow(Real(3L, a.prec()), n) * (a + c) * c;
  }
  return ldexp(c * c, n + 1);
}

Real numerator_factor(PiMethod method, Precision wp) {
  switch (method) {
    case PiMethod::kSalaminBrent: return Real(4L, wp);
    case PiMethod::kPiViaPi4: return 2 * sqrt(Real(2L, wp));
    default: return Real(2L, wp);
  }
}

Real assemble(PiMethod method, const Real& mean, const Real& denominator) {
  if (!(denominator > 0)) {
    throw NumericalFailure("non-positive denominator " + denominator.to_decimal(20) + " in " +
                           std::string(to_string(method)));
  }
  return numerator_factor(method, mean.prec()) * mean * mean / denominator;
}

// Taylor series of atan(1/x) summed until a term drops below 2^(-wp-8).
Real atan_inverse(long x, Precision wp) {
  const Real threshold = pow2(-static_cast<long>(wp) - 8, wp);
  const long x2 = x * x;
  Real power = Real(1L, wp) / x;
  Real sum = power;
  for (long k = 1; power > threshold; ++k) {
    power /= x2;
    const Real term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

DigitsResult run_formula(PiMethod method, const PrecisionContext& ctx, int digits) {
  require_digits(digits, ctx);
  const Setup setup = setup_for(method);
  const Precision wp = ctx.working_bits();
  AgmTrace trace = run_mean(setup.kind, Real(1L, wp), start_b(setup, wp), ctx);

  // Extends the rows with further mean steps until a series term drops
  // below the threshold.
  std::vector<TraceRow> rows = trace.rows();
  int steps = trace.iterations();
  const Real threshold = ctx.ulps(4);
  OrderedSum series(wp);
  for (long n = 1;; ++n) {
    if (n >= static_cast<long>(rows.size())) {
      if (steps >= ctx.max_iters()) {
        throw NonConvergence("series for " + std::string(to_string(method)) +
                             " did not converge in " + std::to_string(ctx.max_iters()) +
                             " steps");
      }
      const TraceRow& last = rows.back();
      Real c = step_c(setup.kind, last.a, last.b);
      auto [a, b] = mean_step(setup.kind, last.a, last.b);
      rows.push_back({n, std::move(a), std::move(b), std::move(c)});
      ++steps;
    }
    const Real term = series_term(setup.kind, n, rows[n].a, rows[n].c);
    series.add(term);
    if (term < threshold) break;
  }
  Real denominator = 1 - series.value();
  const Real value = assemble(method, trace.limit(), denominator);
  return DigitsResult{ctx.finish(value), digits,        steps,     std::move(trace),
                      method,            ctx.bits(),    ctx.finish(denominator)};
}

}  // namespace

std::string_view to_string(PiMethod method) {
  switch (method) {
    case PiMethod::kMachin: return "MACHIN";
    case PiMethod::kSalaminBrent: return "SALAMIN_BRENT";
    case PiMethod::kPi3: return "PI3";
    case PiMethod::kPi4: return "PI4";
    case PiMethod::kPiViaPi4: return "PI_VIA_PI4";
  }
  return "UNKNOWN";
}

void require_digits(int digits, const PrecisionContext& ctx) {
  if (digits < 0) throw DomainError("digit count must be non-negative");
  if (digits > 0 && PrecisionContext::bits_for_digits(digits) > ctx.bits()) {
    throw DomainError(std::to_string(digits) + " digits need at least " +
                      std::to_string(PrecisionContext::bits_for_digits(digits)) +
                      " bits, context has " + std::to_string(ctx.bits()));
  }
}

Real machin_pi(const PrecisionContext& ctx) {
  const Precision wp = ctx.working_bits();
  const Real value = 16 * atan_inverse(5, wp) - 4 * atan_inverse(239, wp);
  return ctx.finish(value);
}

DigitsResult salamin_brent_pi(const PrecisionContext& ctx, int digits) {
  return run_formula(PiMethod::kSalaminBrent, ctx, digits);
}

DigitsResult pi3_formula(const PrecisionContext& ctx, int digits) {
  return run_formula(PiMethod::kPi3, ctx, digits);
}

DigitsResult pi4_formula(const PrecisionContext& ctx, int digits) {
  return run_formula(PiMethod::kPi4, ctx, digits);
}

DigitsResult pi_via_pi4(const PrecisionContext& ctx, int digits) {
  return run_formula(PiMethod::kPiViaPi4, ctx, digits);
}

DigitsResult compute_pi(PiMethod method, const PrecisionContext& ctx, int digits) {
  if (method == PiMethod::kMachin) {
    require_digits(digits, ctx);
    DigitsResult result{machin_pi(ctx), digits, 0, std::nullopt, method, ctx.bits(), std::nullopt};
    return result;
  }
  return run_formula(method, ctx, digits);
}

Real pi_formula_truncated(PiMethod method, int terms, const PrecisionContext& ctx) {
  if (terms < 0) throw DomainError("pi_formula_truncated: terms must be non-negative");
  const Setup setup = setup_for(method);
  const Precision wp = ctx.working_bits();
  Real a(1L, wp);
  Real b = start_b(setup, wp);
  OrderedSum series(wp);
  for (long n = 1; n <= terms + 1; ++n) {
    Real c = step_c(setup.kind, a, b);
    auto [next_a, next_b] = mean_step(setup.kind, a, b);
    a = std::move(next_a);
    b = std::move(next_b);
    if (n <= terms) series.add(series_term(setup.kind, n, a, c));
  }
  return ctx.finish(assemble(method, a, 1 - series.value()));
}

}  // namespace pell
