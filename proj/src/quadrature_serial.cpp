#include <vector>

#include "tanh_sinh.hpp"

namespace pell::serial {

QuadResult integrate(const Integrand& f, const Real& lo, const Real& hi,
                     const PrecisionContext& ctx) {
  return tanh_sinh::refine(f, lo, hi, ctx, true, [](const tanh_sinh::ChunkJob& job) {
    std::vector<Real> terms;
    terms.reserve(job.term_count());
    for (std::size_t i = 0; i < job.term_count(); ++i) terms.push_back(job.term(i));
    return terms;
  });
}

}  // namespace pell::serial
