#pragma once

// Internal: node tables and the level-refinement driver shared by the
// parallel and serial quadrature kernels.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/quadrature.hpp"
#include "pell/summation.hpp"

namespace pell::tanh_sinh {

// One positive node u > 0 (or the centre u = 0) of the transformed rule.
// x = tanh(pi/2 sinh u), d = 1 - x, weight = (pi/2) cosh u / cosh^2(pi/2 sinh u).
// The step factor h is applied by the driver.
struct Node {
  double u = 0.0;
  Real x;
  Real d;
  Real weight;
};

inline constexpr std::size_t kChunkSize = 32;
inline constexpr int kMinLevel = 3;

// Nodes of one chunk of one level, shared and immutable. Level 0 holds
// u = 0, 1, 2, ...; level L >= 1 holds the odd multiples of 2^-L. Chunks past
// the truncation point are empty.
std::shared_ptr<const std::vector<Node>> node_chunk(Precision prec, int level, std::size_t chunk);

// Terms w_i * f(node_i) for a chunk, ordered [centre,] then for each node its
// right (t near hi) and left (t near lo) mirror image.
struct ChunkJob {
  const Integrand& f;
  const std::vector<Node>& nodes;
  const Real& lo;
  const Real& hi;
  const Real& half;  // (hi - lo) / 2
  bool has_centre;   // first node of level 0 is u = 0 and is evaluated once

  [[nodiscard]] std::size_t term_count() const {
    return has_centre ? 2 * nodes.size() - 1 : 2 * nodes.size();
  }

  // Term number `i` of the chunk.
  [[nodiscard]] Real term(std::size_t i) const {
    std::size_t node_index = i;
    bool right = true;
    if (has_centre) {
      if (i == 0) {
        const Real t = lo + half;
        return checked(nodes[0].weight, Abscissa{t, half, half});
      }
      node_index = (i + 1) / 2;
      right = (i % 2) == 1;
    } else {
      node_index = i / 2;
      right = (i % 2) == 0;
    }
    const Node& n = nodes[node_index];
    const Real near = half * n.d;
    const Real far = half * (1 + n.x);
    if (right) {
      const Real t = hi - near;
      return checked(n.weight, Abscissa{t, far, near});
    }
    const Real t = lo + near;
    return checked(n.weight, Abscissa{t, near, far});
  }

 private:
  [[nodiscard]] Real checked(const Real& weight, const Abscissa& at) const {
    Real value = f(at);
    if (!value.is_finite()) {
      throw NonFinite("integrand is not finite at t = " + at.t.to_decimal(20));
    }
    return weight * value;
  }
};

// Level refinement shared by both kernels. `evaluate(job)` must return the
// chunk's terms in job order.
template <class Evaluate>
QuadResult refine(const Integrand& f, const Real& lo_in, const Real& hi_in,
                  const PrecisionContext& ctx, bool round_result, Evaluate&& evaluate) {
  if (!(lo_in < hi_in)) throw InvalidDomain("integrate: need lo < hi");
  const Precision wp = ctx.working_bits();
  const Real lo = lo_in.rounded(wp);
  const Real hi = hi_in.rounded(wp);
  const Real half = ldexp(hi - lo, -1);

  OrderedSum total(wp);
  Real magnitude(wp);  // running sum of |term|, scale for tail truncation
  Real previous(wp);
  QuadResult result{Real(wp), Real(wp), 0, 0};

  for (int level = 0; level <= ctx.max_quad_level(); ++level) {
    for (std::size_t chunk = 0;; ++chunk) {
      const auto nodes = node_chunk(wp, level, chunk);
      if (nodes->empty()) break;
      const ChunkJob job{f, *nodes, lo, hi, half, level == 0 && chunk == 0};
      const std::vector<Real> terms = evaluate(job);
      Real largest(wp);
      for (const Real& term : terms) {
        total.add(term);
        const Real size = abs(term);
        magnitude += size;
        if (size > largest) largest = size;
      }
      result.evaluations += static_cast<long>(terms.size());
      // Past u = 1 the weights decay doubly exponentially; once a whole chunk
      // is below one working ulp of the running magnitude the rest is noise.
      if (nodes->front().u >= 1.0 && largest < ldexp(magnitude, -static_cast<long>(wp))) break;
    }

    Real estimate = ldexp(total.value() * half, -level);
    if (level > 0) {
      result.err_estimate = abs(estimate - previous);
      result.levels_used = level;
      if (level >= std::min(kMinLevel, ctx.max_quad_level()) &&
          result.err_estimate < ctx.quad_tol()) {
        result.value = round_result ? ctx.finish(estimate) : std::move(estimate);
        if (round_result) result.err_estimate = ctx.finish(result.err_estimate);
        return result;
      }
    }
    previous = std::move(estimate);
  }
  throw NonConvergence("integrate: no convergence after level " +
                       std::to_string(ctx.max_quad_level()) + ", error estimate " +
                       result.err_estimate.to_decimal(6));
}

}  // namespace pell::tanh_sinh
