#pragma once

#include <concepts>
#include <functional>

#include "pell/precision.hpp"
#include "pell/real.hpp"

namespace pell {

struct QuadResult {
  Real value;
  Real err_estimate;  // |S_L - S_(L-1)| between the last two levels
  int levels_used = 0;
  long evaluations = 0;
};

// A quadrature node as seen by an integrand. `from_lo` = t - lo and
// `to_hi` = hi - t are carried separately and exactly, so factors such as
// (1 - t)^(-1/p) stay accurate when t is within a few ulps of an endpoint.
struct Abscissa {
  const Real& t;
  const Real& from_lo;
  const Real& to_hi;
};

using Integrand = std::function<Real(const Abscissa&)>;

template <class F>
concept ScalarIntegrand =
    std::invocable<const F&, const Real&> && !std::invocable<const F&, const Abscissa&>;

namespace detail {

// Adapts f(t) to the node form. Nodes whose abscissa rounds onto an endpoint
// are dropped, since f may be singular there.
template <ScalarIntegrand F>
Integrand scalar_adapter(F f) {
  return [f = std::move(f)](const Abscissa& node) -> Real {
    if (node.from_lo.is_zero() || node.to_hi.is_zero()) return Real(node.t.prec());
    return f(node.t);
  };
}

// As integrate(), but the value and error estimate stay at the context's
// working precision instead of being rounded to ctx.bits(). Used when the
// result feeds further arithmetic.
QuadResult integrate_working(const Integrand& f, const Real& lo, const Real& hi,
                             const PrecisionContext& ctx);

}  // namespace detail

// Tanh-sinh (double-exponential) quadrature of f over [lo, hi].
//
// Each level halves the step of the previous one and reuses its nodes. The
// refinement stops at the first level L >= 3 with |S_L - S_(L-1)| < quad_tol.
// Integrable algebraic endpoint singularities are fine. Node evaluations
// within a level run in parallel; partial sums are reduced in a fixed order,
// so the result does not depend on the thread count.
//
// Throws InvalidDomain when lo >= hi, NonFinite when f returns NaN or an
// infinity at a node, NonConvergence when max_quad_level is exhausted.
QuadResult integrate(const Integrand& f, const Real& lo, const Real& hi,
                     const PrecisionContext& ctx);

template <ScalarIntegrand F>
QuadResult integrate(F f, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
  return integrate(detail::scalar_adapter(std::move(f)), lo, hi, ctx);
}

// Single-threaded reference kernel. Produces results bit-identical to
// integrate(); kept for testing and benchmarking the parallel kernel.
namespace serial {

QuadResult integrate(const Integrand& f, const Real& lo, const Real& hi,
                     const PrecisionContext& ctx);

template <ScalarIntegrand F>
QuadResult integrate(F f, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
  return integrate(detail::scalar_adapter(std::move(f)), lo, hi, ctx);
}

}  // namespace serial

}  // namespace pell
