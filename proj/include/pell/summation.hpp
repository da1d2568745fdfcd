#pragma once

#include <span>

#include "pell/real.hpp"

namespace pell {

// Neumaier-compensated running sum. Terms are consumed in the order they are
// added, so a fixed sequence at a fixed precision always gives the same bits.
class OrderedSum {
 public:
  explicit OrderedSum(Precision prec) : sum_(prec), carry_(prec) {}

  void add(const Real& term);
  [[nodiscard]] Real value() const { return sum_ + carry_; }

 private:
  Real sum_;
  Real carry_;
};

// Compensated sum of `terms` in the given order, at the widest term precision
// (or `prec` when larger). The empty sum is 0.
Real sum_ordered(std::span<const Real> terms, Precision prec = Real::kDefaultPrecision);

}  // namespace pell
