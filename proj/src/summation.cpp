#include "pell/summation.hpp"

#include <algorithm>

namespace pell {

void OrderedSum::add(const Real& term) {
  const Real x = term.rounded(sum_.prec());
  Real next(sum_.prec());
  mpfr_add(next.get(), sum_.get(), x.get(), MPFR_RNDN);
  // Fast2Sum error term; exact under round-to-nearest.
  Real err(sum_.prec());
  if (mpfr_cmpabs(sum_.get(), x.get()) >= 0) {
    mpfr_sub(err.get(), sum_.get(), next.get(), MPFR_RNDN);
    mpfr_add(err.get(), err.get(), x.get(), MPFR_RNDN);
  } else {
    mpfr_sub(err.get(), x.get(), next.get(), MPFR_RNDN);
    mpfr_add(err.get(), err.get(), sum_.get(), MPFR_RNDN);
  }
  mpfr_add(carry_.get(), carry_.get(), err.get(), MPFR_RNDN);
  mpfr_swap(sum_.get(), next.get());
}

Real sum_ordered(std::span<const Real> terms, Precision prec) {
  for (const Real& t : terms) prec = std::max(prec, t.prec());
  OrderedSum acc(prec);
  for (const Real& t : terms) acc.add(t);
  return acc.value();
}

}  // namespace pell
