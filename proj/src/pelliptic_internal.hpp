#pragma once

// Internal: working-precision (unrounded) forms of the p-elliptic integrals,
// shared with the mean-iteration and pi-formula modules.

#include "pell/pelliptic.hpp"

namespace pell::detail {

Real k_working(const Modulus& m, const PrecisionContext& ctx);
Real e_working(const Modulus& m, const PrecisionContext& ctx);
Real i_working(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx);
Real j_working(const Real& a, const Real& b, const PExponent& p, const PrecisionContext& ctx);
Real dk_from(const Modulus& m, const Real& k_val, const Real& e_val);
Real de_from(const Modulus& m, const Real& k_val, const Real& e_val);
Real half_pi_p(const PExponent& p, Precision wp);
Real hyp2f1_working(const Real& a, const Real& b, const Real& c, const Real& x,
                    const PrecisionContext& ctx);

}  // namespace pell::detail
