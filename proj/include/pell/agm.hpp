#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "pell/precision.hpp"
#include "pell/real.hpp"
#include "pell/report.hpp"

// The three mean iterations with a Gauss-type formula:
//   P2  a' = (a + b)/2,             b' = sqrt(a b)
//   P3  a' = (a + 2b)/3,            b' = cbrt((a^2 + a b + b^2) b / 3)
//   P4  a' = sqrt((a^2 + 3b^2)/4),  b' = ((a^2 + b^2) b^2 / 2)^(1/4)
// and the identities tying them to the p-elliptic integrals.
namespace pell {

enum class MeanKind { kP2, kP3, kP4 };

// 2, 3 or 4.
long exponent_of(MeanKind kind);
std::string_view to_string(MeanKind kind);  // "p2", "p3", "p4"

struct TraceRow {
  long n = 0;
  Real a;
  Real b;
  // P2: sqrt(a^2 - b^2), P3: cbrt(a^3 - b^3), P4: (a^4 - b^4)^(1/4).
  Real c;
};

// The full iteration from (a0, b0) at working precision.
//
// Rows past the first store c_n through the exact step relations
// c_(n+1) = (a_n - b_n)/2, (a_n - b_n)/3 and sqrt(a_n^2 - b_n^2)/2 for P2, P3
// and P4. next_c() is c for the step after the last row.
class AgmTrace {
 public:
  AgmTrace(MeanKind kind, std::vector<TraceRow> rows, Real next_c)
      : kind_(kind), rows_(std::move(rows)), next_c_(std::move(next_c)) {}

  [[nodiscard]] MeanKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<TraceRow>& rows() const { return rows_; }
  // a of the last row.
  [[nodiscard]] const Real& limit() const { return rows_.back().a; }
  [[nodiscard]] int iterations() const { return static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] const Real& next_c() const { return next_c_; }
  // P4 only: kappa_n = (1 - (b_n/a_n)^4)^(1/4) = c_n / a_n.
  [[nodiscard]] Real kappa(std::size_t n) const;

 private:
  MeanKind kind_;
  std::vector<TraceRow> rows_;
  Real next_c_;
};

// One step of the recurrence, at the precision of the inputs. Requires
// a >= b > 0; the output satisfies a' >= b' > 0.
std::pair<Real, Real> mean_step(MeanKind kind, const Real& a, const Real& b);

// c_(n+1) from (a_n, b_n) through the step relations above.
Real step_c(MeanKind kind, const Real& a, const Real& b);

// Iterates from (a, b) until a_n - b_n < 2^(4 - bits) a_0. Throws
// NonConvergence after ctx.max_iters() steps, DomainError unless a >= b > 0.
AgmTrace run_mean(MeanKind kind, const Real& a, const Real& b, const PrecisionContext& ctx);

// M_p(ca, cb) against c M_p(a, b). Tolerance 2^(8 - bits) max(1, c M_p(a, b)).
IdentityReport homogeneity_check(MeanKind kind, const Real& a, const Real& b, const Real& c,
                                 const PrecisionContext& ctx);

// w_n I_p(a_n, b_n) at n = n_steps against n = 0, with weights 1, a_n, a_n^2
// for P2, P3, P4. Tolerance 8 quad_tol.
IdentityReport invariance_check(MeanKind kind, const Real& a, const Real& b, int n_steps,
                                const PrecisionContext& ctx);

// a_(n+1)^2 - b_(n+1)^2 <= (a_n^2 - b_n^2)/4 along a P4 trace; a single-row
// trace holds vacuously. DomainError for other kinds.
// Reports the largest excess over the bound; slack 2^(8 - bits) a_0^2.
IdentityReport contraction_check(const AgmTrace& trace, const PrecisionContext& ctx);

// 2 J_(n+1) - J_n against a_n^2 b_n^2 I_n along the P4 iteration, where
// I_n = I_4(a_n, b_n) and J_n = J_4(a_n, b_n). Tolerance 8 quad_tol.
IdentityReport lemma_ij_check(const Real& a, const Real& b, int n, const PrecisionContext& ctx);

// J_4(a, b) against (a^4 - a^2 S) I_4(a, b) with S = sum_(n>=1) 2^n c_n^2
// summed until a term drops below 2^(4 - bits) a^4. Tolerance 16 quad_tol.
IdentityReport prop_ek_check(const Real& a, const Real& b, const PrecisionContext& ctx);

// K_p(k) by quadrature against (pi_p/2) / M_p(1, k') for p = 2, 3, 4.
// Tolerance 8 quad_tol.
IdentityReport gauss_formula_check(MeanKind kind, const Real& k, const PrecisionContext& ctx);

}  // namespace pell
