#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pell/precision.hpp"
#include "pell/real.hpp"

namespace pell {

enum class IdentityId {
  kLegendre,
  kLandenI,
  kLandenII,
  kLandenIII,
  kLandenIV,
  kLemmaIJ,
  kInvariance,
  kPropEK,
  kContraction,
  kHomogeneity,
  kOdeK,
  kOdeKPrime,
  kOdeE,
  kOdeEPrimeMinusKPrime,
  kRamanujan,
  kHypergeometricK,
  kHypergeometricE,
  kGaussP2,
  kK3Formula,
  kK4Formula,
};

// Stable lowercase name, e.g. "landen-iii", "gauss-p2".
std::string_view to_string(IdentityId id);

using NamedValue = std::pair<std::string, Real>;

// Outcome of checking lhs == rhs numerically.
struct IdentityReport {
  IdentityId id;
  std::vector<NamedValue> inputs;
  Real lhs;
  Real rhs;
  Real abs_defect;  // |lhs - rhs|
  Real rel_defect;  // abs_defect / |rhs|, or abs_defect when rhs == 0
  Real tol;
  bool pass = false;  // abs_defect <= tol
};

// Builds a report from working-precision sides; defects are computed before
// anything is rounded, then every field is rounded to ctx.bits().
IdentityReport make_report(IdentityId id, std::vector<NamedValue> inputs, const Real& lhs,
                           const Real& rhs, const Real& tol, const PrecisionContext& ctx);

// One TEXT line: identity, inputs, defect, tol, PASS/FAIL.
std::string format_report(const IdentityReport& report);

}  // namespace pell
