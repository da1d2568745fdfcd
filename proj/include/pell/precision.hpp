#pragma once

#include "pell/real.hpp"

namespace pell {

// Working precision and tolerances threaded through every operation.
//
// Internally, computations run at `working_bits()` (bits plus guard bits) and
// results are rounded back to `bits` on return.
class PrecisionContext {
 public:
  static constexpr long kMinBits = 64;
  static constexpr long kGuardBits = 32;
  static constexpr int kDefaultMaxQuadLevel = 12;
  static constexpr int kDefaultMaxIters = 64;

  // quad_tol defaults to 2^(10 - bits). Throws DomainError when bits < 64.
  explicit PrecisionContext(long bits);
  PrecisionContext(long bits, Real quad_tol, int max_quad_level, int max_iters);

  // Bits needed to carry `digits` decimal digits plus a 16-bit margin.
  static long bits_for_digits(long digits);
  static PrecisionContext for_digits(long digits) { return PrecisionContext(bits_for_digits(digits)); }

  [[nodiscard]] long bits() const { return bits_; }
  [[nodiscard]] Precision working_bits() const { return bits_ + kGuardBits; }
  [[nodiscard]] const Real& quad_tol() const { return quad_tol_; }
  [[nodiscard]] int max_quad_level() const { return max_quad_level_; }
  [[nodiscard]] int max_iters() const { return max_iters_; }

  // 2^(offset - bits); the "few ulps at this precision" scale.
  [[nodiscard]] Real ulps(long offset) const { return pow2(offset - bits_, working_bits()); }
  // Integer n at working precision.
  [[nodiscard]] Real real(long n) const { return Real(n, working_bits()); }
  // Decimal literal parsed at working precision.
  [[nodiscard]] Real parse(std::string_view text) const { return Real(text, working_bits()); }
  // Rounds a working-precision result back to `bits`.
  [[nodiscard]] Real finish(const Real& x) const { return x.rounded(bits_); }

  PrecisionContext with_quad_tol(Real tol) const;

 private:
  long bits_;
  Real quad_tol_;
  int max_quad_level_;
  int max_iters_;
};

}  // namespace pell
