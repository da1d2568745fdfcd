#include "pell/precision.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pell/errors.hpp"

namespace pell {

PrecisionContext::PrecisionContext(long bits)
    : PrecisionContext(bits, pow2(10 - bits, bits + kGuardBits), kDefaultMaxQuadLevel,
                       kDefaultMaxIters) {}

PrecisionContext::PrecisionContext(long bits, Real quad_tol, int max_quad_level, int max_iters)
    : bits_(bits),
      quad_tol_(std::move(quad_tol)),
      max_quad_level_(max_quad_level),
      max_iters_(max_iters) {
  if (bits_ < kMinBits) {
    throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits_));
  }
  if (!(quad_tol_ > 0) || !(quad_tol_ < 1)) {
    throw DomainError("quadrature tolerance must lie in (0, 1)");
  }
  if (max_quad_level_ < 1) throw DomainError("max_quad_level must be positive");
  if (max_iters_ < 1) throw DomainError("max_iters must be positive");
}

long PrecisionContext::bits_for_digits(long digits) {
  if (digits < 1) throw DomainError("digit count must be at least 1");
  const auto bits = static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0))) + 16;
  return bits < kMinBits ? kMinBits : bits;
}

PrecisionContext PrecisionContext::with_quad_tol(Real tol) const {
  return PrecisionContext(bits_, std::move(tol), max_quad_level_, max_iters_);
}

}  // namespace pell
