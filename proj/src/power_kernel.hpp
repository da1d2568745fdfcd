#pragma once

// Internal: x^p, x^(1/p) and 1 - t^p for a fixed exponent. Integer and
// small-denominator rational exponents (p = m/q) use integer powers and
// roots; other exponents go through exp and log.

#include "pell/elementary.hpp"
#include "pell/ptrig.hpp"

namespace pell::detail {

class PowerKernel {
 public:
  PowerKernel(const PExponent& p, Precision prec)
      : p_(p.value(), prec), inv_p_(1 / p_), integer_(p.integer()) {
    if (integer_ > 0) return;
    for (long q = 2; q <= kMaxDenominator; ++q) {
      const Real m = p.value() * q;
      if (m.is_integer() && m <= kMaxNumerator) {
        num_ = m.to_long();
        den_ = q;
        return;
      }
    }
  }

  [[nodiscard]] const Real& p() const { return p_; }
  [[nodiscard]] long integer() const { return integer_; }

  [[nodiscard]] Real pow_p(const Real& x) const {
    if (integer_ > 0) return pell::pow(x, integer_);
    if (x.is_zero()) return x;
    if (num_ > 0) return nth_root(pell::pow(x, num_), static_cast<unsigned long>(den_));
    return pell::pow(x, p_);
  }

  // x^(1/p), x >= 0.
  [[nodiscard]] Real root_p(const Real& x) const {
    if (integer_ > 0) return nth_root(x, static_cast<unsigned long>(integer_));
    if (x.is_zero()) return x;
    if (num_ > 0) return nth_root(pell::pow(x, den_), static_cast<unsigned long>(num_));
    return pell::pow(x, inv_p_);
  }

  // 1 - t^p for t in [0, 1], given one_minus_t = 1 - t exactly. No
  // cancellation near t = 1.
  [[nodiscard]] Real one_minus_pow(const Real& t, const Real& one_minus_t) const {
    if (ldexp(t, 1) <= 1) return 1 - pow_p(t);
    if (integer_ > 0) return one_minus_t * geometric(t, integer_);
    if (num_ > 0) {
      // u = t^(1/q): 1 - u^m = (1 - t) (1 + ... + u^(m-1)) / (1 + ... + u^(q-1))
      const Real u = nth_root(t, static_cast<unsigned long>(den_));
      return one_minus_t * geometric(u, num_) / geometric(u, den_);
    }
    return -expm1(p_ * log1p(-one_minus_t));
  }

 private:
  static constexpr long kMaxDenominator = 8;
  static constexpr long kMaxNumerator = 64;

  // 1 + x + ... + x^(n-1)
  static Real geometric(const Real& x, long n) {
    Real acc(1L, x.prec());
    for (long j = 1; j < n; ++j) acc = acc * x + 1;
    return acc;
  }

  Real p_;
  Real inv_p_;
  long integer_;
  long num_ = 0;
  long den_ = 0;
};

}  // namespace pell::detail
