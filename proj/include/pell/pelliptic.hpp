#pragma once

#include <utility>

#include "pell/precision.hpp"
#include "pell/ptrig.hpp"
#include "pell/real.hpp"
#include "pell/report.hpp"

// Complete p-elliptic integrals K_p, E_p and the two-parameter integrals
// I_p, J_p. Every theta-integral over [0, pi_p/2] is evaluated after the
// substitution t = sin_p(theta), which turns it into an integral over [0, 1]
// with the single endpoint factor (1 - t^p)^(-1/p).
namespace pell {

// Modulus k of a p-elliptic integral together with its complement
// k' = (1 - k^p)^(1/p).
class Modulus {
 public:
  // Throws DomainError unless 0 <= k <= 1.
  Modulus(const PExponent& p, const Real& k, const PrecisionContext& ctx);
  // A modulus whose complement is known in closed form. The pair is trusted
  // to satisfy k^p + k'^p = 1.
  static Modulus with_complement(const PExponent& p, const Real& k, const Real& k_comp,
                                 const PrecisionContext& ctx);

  [[nodiscard]] const PExponent& p() const { return p_; }
  [[nodiscard]] const Real& k() const { return k_; }
  [[nodiscard]] const Real& k_comp() const { return k_comp_; }
  [[nodiscard]] const Real& k_pow() const { return k_pow_; }            // k^p
  [[nodiscard]] const Real& k_comp_pow() const { return k_comp_pow_; }  // 1 - k^p
  // The modulus k' with complement k.
  [[nodiscard]] Modulus complementary() const;

 private:
  Modulus(PExponent p, Real k, Real k_comp, Real k_pow, Real k_comp_pow)
      : p_(std::move(p)),
        k_(std::move(k)),
        k_comp_(std::move(k_comp)),
        k_pow_(std::move(k_pow)),
        k_comp_pow_(std::move(k_comp_pow)) {}

  PExponent p_;
  Real k_;
  Real k_comp_;
  Real k_pow_;
  Real k_comp_pow_;
};

// K_p(k) = int_0^1 (1 - k^p t^p)^(1/p - 1) (1 - t^p)^(-1/p) dt, 0 <= k < 1.
Real elliptic_k(const Modulus& m, const PrecisionContext& ctx);
// E_p(k) = int_0^1 (1 - k^p t^p)^(1/p) (1 - t^p)^(-1/p) dt, 0 <= k <= 1.
Real elliptic_e(const Modulus& m, const PrecisionContext& ctx);

// I_p(a, b) = int_0^1 (a^p (1 - t^p) + b^p t^p)^(1/p - 1) (1 - t^p)^(-1/p) dt.
Real integral_i(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx);
// J_p(a, b) = int_0^1 (a^p (1 - t^p) + b^p t^p)^(1/p) (1 - t^p)^(-1/p) dt.
Real integral_j(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx);

// dK_p/dk = (E_p - k'^p K_p) / (k k'^p), 0 < k < 1.
Real elliptic_k_derivative(const Modulus& m, const PrecisionContext& ctx);
// dE_p/dk = (E_p - K_p) / k, 0 < k < 1.
Real elliptic_e_derivative(const Modulus& m, const PrecisionContext& ctx);

// Solutions of the two second-order equations satisfied by the integrals:
//   K, K'       : k(1-k^p) y'' + (1-(p+1)k^p) y' - (p-1) k^(p-1) y = 0
//   E, E' - K'  : k(1-k^p) y'' + (1-k^p) y' + k^(p-1) y = 0
// where K'(k) = K_p(k').
enum class OdeSolution { kK, kKPrime, kE, kEPrimeMinusKPrime };

// Step h = 2^(-bits/3) used for finite differences in k.
Real fd_step(const PrecisionContext& ctx);

// Constant C in the residual bound C h^2 of ode_residual(). At p = 2 the
// largest |residual| / h^2 over k in {0.1, ..., 0.9} is about 1e3 (the primed
// solutions near k = 0.1); C carries a further factor of 16.
inline constexpr long kOdeToleranceConstant = 16384;

// Residual of the ODE for `which` at m.k(). y' comes from the closed-form
// derivatives, y'' from a central difference of y' with step fd_step(ctx).
// Requires 2^(-bits/4) <= k <= 1 - 2^(-bits/4).
IdentityReport ode_residual(OdeSolution which, const Modulus& m, const PrecisionContext& ctx);

// K_p(k') E_p(k) + K_p(k) E_p(k') - K_p(k) K_p(k') against pi_p / 2, 0 < k < 1.
// Tolerance 8 quad_tol.
IdentityReport legendre_defect(const PExponent& p, const Real& k, const PrecisionContext& ctx);

// Gauss hypergeometric series F(a, b; c; x) summed until a term, scaled by
// the geometric tail bound 1/(1-x), drops below 2^(-bits-8). Accepts
// 0 <= x < 1; throws NonConvergence after kHypergeometricTermCap terms.
inline constexpr long kHypergeometricTermCap = 1'000'000;
Real hyp2f1(const Real& a, const Real& b, const Real& c, const Real& x,
            const PrecisionContext& ctx);
// Tolerance for comparisons of series values: 2^(8 - bits).
Real series_tol(const PrecisionContext& ctx);

// K_p (or E_p) by quadrature against (pi_p / 2) F(1/p, 1 -/+ 1/p; 1; k^p).
// Requires k^p <= 3/4. Tolerance 8 max(quad_tol, series_tol).
IdentityReport hypergeometric_check(bool second_kind, const Modulus& m,
                                    const PrecisionContext& ctx);

// The four quartic transformations (p = 4), with
//   l1 = (8 (1+k^2) k^2 / (1+3k^2)^2)^(1/4),   l2 = sqrt((1-k'^2) / (1+3k'^2)):
//   i   K(k) = K(l1) / sqrt(1+3k^2)
//   ii  K(k) = 2 K(l2) / sqrt(1+3k'^2)
//   iii E(k) = sqrt(1+3k^2)/2 E(l1) + (1-k^2)/2 K(k)
//   iv  E(k) = sqrt(1+3k'^2) E(l2) - k'^2 K(k)
// Requires 0 <= k < 1. Tolerance 8 quad_tol.
enum class LandenForm { kI, kII, kIII, kIV };
IdentityReport landen_check(LandenForm which, const Real& k, const PrecisionContext& ctx);

// F(1/4,3/4;1; 1-((1-x)/(1+3x))^2) against sqrt(1+3x) F(1/4,3/4;1; x^2) for
// 0 <= x <= 1/2. Tolerance series_tol.
IdentityReport ramanujan_defect(const Real& x, const PrecisionContext& ctx);

}  // namespace pell
