#pragma once

#include <optional>
#include <string_view>

#include "pell/agm.hpp"
#include "pell/precision.hpp"
#include "pell/real.hpp"

namespace pell {

enum class PiMethod { kMachin, kSalaminBrent, kPi3, kPi4, kPiViaPi4 };

// "MACHIN", "SALAMIN_BRENT", "PI3", "PI4", "PI_VIA_PI4".
std::string_view to_string(PiMethod method);

struct DigitsResult {
  Real value;
  int requested_digits = 0;
  // Mean steps taken, including any taken past the trace to finish the series.
  int iterations_used = 0;
  std::optional<AgmTrace> trace;
  PiMethod method = PiMethod::kMachin;
  long bits = 0;
  // 1 - sum of the series; empty for Machin.
  std::optional<Real> denominator;
};

// Throws DomainError unless 0 <= digits and digits log2(10) + 16 <= bits.
void require_digits(int digits, const PrecisionContext& ctx);

// 16 atan(1/5) - 4 atan(1/239) by Taylor series. Uses no mean iteration.
Real machin_pi(const PrecisionContext& ctx);

// 4 M_2(1, 1/sqrt 2)^2 / (1 - sum 2^(n+1) c_n^2).
DigitsResult salamin_brent_pi(const PrecisionContext& ctx, int digits = 0);
// pi_3 = 2 M_3(1, 2^(-1/3))^2 / (1 - 2 sum 3^n (a_n + c_n) c_n).
DigitsResult pi3_formula(const PrecisionContext& ctx, int digits = 0);
// pi_4 = 2 M_4(1, 2^(-1/4))^2 / (1 - sum 2^(n+1) c_n^2).
DigitsResult pi4_formula(const PrecisionContext& ctx, int digits = 0);
// pi = 2 sqrt(2) M_4(1, 2^(-1/4))^2 / (1 - sum 2^(n+1) c_n^2).
DigitsResult pi_via_pi4(const PrecisionContext& ctx, int digits = 0);

// Dispatches on `method`; Machin results carry no trace.
DigitsResult compute_pi(PiMethod method, const PrecisionContext& ctx, int digits = 0);

// The same formula cut off after `terms` series terms, with a_(terms+1) in
// place of the mean. Not available for Machin.
Real pi_formula_truncated(PiMethod method, int terms, const PrecisionContext& ctx);

}  // namespace pell
