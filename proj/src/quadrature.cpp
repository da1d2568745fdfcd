#include <exception>
#include <vector>

#include "tanh_sinh.hpp"

namespace pell {

namespace {

std::vector<Real> evaluate_parallel(const tanh_sinh::ChunkJob& job) {
  const auto count = static_cast<long>(job.term_count());
  std::vector<Real> terms(job.term_count());
  std::vector<std::exception_ptr> failures(job.term_count());
#pragma omp parallel for schedule(dynamic, 2)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      terms[k] = job.term(k);
    } catch (...) {
      failures[k] = std::current_exception();
    }
  }
  // Rethrows the failure with the lowest index.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return terms;
}

}  // namespace

QuadResult integrate(const Integrand& f, const Real& lo, const Real& hi,
                     const PrecisionContext& ctx) {
  return tanh_sinh::refine(f, lo, hi, ctx, true, evaluate_parallel);
}

namespace detail {

QuadResult integrate_working(const Integrand& f, const Real& lo, const Real& hi,
                             const PrecisionContext& ctx) {
  return tanh_sinh::refine(f, lo, hi, ctx, false, evaluate_parallel);
}

}  // namespace detail

}  // namespace pell
