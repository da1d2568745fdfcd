#include "pell/report.hpp"

#include <array>
#include <sstream>

namespace pell {

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::kLegendre: return "legendre";
    case IdentityId::kLandenI: return "landen-i";
    case IdentityId::kLandenII: return "landen-ii";
    case IdentityId::kLandenIII: return "landen-iii";
    case IdentityId::kLandenIV: return "landen-iv";
    case IdentityId::kLemmaIJ: return "lemma-ij";
    case IdentityId::kInvariance: return "invariance";
    case IdentityId::kPropEK: return "prop-ek";
    case IdentityId::kContraction: return "contraction";
    case IdentityId::kHomogeneity: return "homogeneity";
    case IdentityId::kOdeK: return "ode-k";
    case IdentityId::kOdeKPrime: return "ode-kprime";
    case IdentityId::kOdeE: return "ode-e";
    case IdentityId::kOdeEPrimeMinusKPrime: return "ode-eprime-minus-kprime";
    case IdentityId::kRamanujan: return "ramanujan";
    case IdentityId::kHypergeometricK: return "hypergeometric-k";
    case IdentityId::kHypergeometricE: return "hypergeometric-e";
    case IdentityId::kGaussP2: return "gauss-p2";
    case IdentityId::kK3Formula: return "k3-formula";
    case IdentityId::kK4Formula: return "k4-formula";
  }
  return "unknown";
}

IdentityReport make_report(IdentityId id, std::vector<NamedValue> inputs, const Real& lhs,
                           const Real& rhs, const Real& tol, const PrecisionContext& ctx) {
  const Real defect = abs(lhs - rhs);
  const Real rel = rhs.is_zero() ? defect : defect / abs(rhs);
  IdentityReport report{id,
                        std::move(inputs),
                        ctx.finish(lhs),
                        ctx.finish(rhs),
                        ctx.finish(defect),
                        ctx.finish(rel),
                        ctx.finish(tol),
                        defect <= tol};
  for (auto& [name, value] : report.inputs) value = ctx.finish(value);
  return report;
}

namespace {

// Eight significant digits without trailing zeros: 0.5, 2, 0.84089642.
std::string compact(const Real& x) {
  std::string text = x.to_decimal(8);
  if (text.find('.') == std::string::npos || text.find('e') != std::string::npos) return text;
  text.erase(text.find_last_not_of('0') + 1);
  if (text.back() == '.') text.pop_back();
  return text;
}

}  // namespace

std::string format_report(const IdentityReport& report) {
  std::ostringstream line;
  line << to_string(report.id);
  for (const auto& [name, value] : report.inputs) line << ' ' << name << '=' << compact(value);
  line << " defect=" << report.abs_defect.to_scientific(3) << " tol=" << report.tol.to_scientific(3)
       << ' ' << (report.pass ? "PASS" : "FAIL");
  return line.str();
}

}  // namespace pell
