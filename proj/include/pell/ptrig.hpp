#pragma once

#include <string_view>

#include "pell/precision.hpp"
#include "pell/real.hpp"

namespace pell {

// The exponent p of the generalized trigonometric functions, 1 < p < inf.
class PExponent {
 public:
  // Throws DomainError unless p > 1.
  explicit PExponent(Real p);
  explicit PExponent(long p) : PExponent(Real(p, 64)) {}
  PExponent(std::string_view text, Precision prec) : PExponent(Real(text, prec)) {}

  [[nodiscard]] const Real& value() const { return p_; }
  // p itself when it is a (small) integer, otherwise 0.
  [[nodiscard]] long integer() const { return integer_; }
  [[nodiscard]] double to_double() const { return p_.to_double(); }

 private:
  Real p_;
  long integer_ = 0;
};

// pi_p = 2 pi / (p sin(pi / p)), the half-period of sin_p.
Real pi_p(const PExponent& p, const PrecisionContext& ctx);

// arcsin_p x = integral over [0, x] of (1 - t^p)^(-1/p) dt, for 0 <= x <= 1.
// Values with x^p > 1/2 are computed as pi_p/2 minus the integral over [x, 1].
Real arcsin_p(const Real& x, const PExponent& p, const PrecisionContext& ctx);

// Inverse of arcsin_p on [0, pi_p/2]. Newton iteration on
// arcsin_p(s) - theta, safeguarded by a bisection bracket on [0, 1].
Real sin_p(const Real& theta, const PExponent& p, const PrecisionContext& ctx);

// cos_p theta = (1 - sin_p^p theta)^(1/p) on [0, pi_p/2].
Real cos_p(const Real& theta, const PExponent& p, const PrecisionContext& ctx);

}  // namespace pell
