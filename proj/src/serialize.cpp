#include "pell/serialize.hpp"

#include <sstream>

namespace pell {

namespace {

std::string text(const Real& x, const PrecisionContext& ctx) { return ctx.finish(x).to_string(); }

}  // namespace

std::string digits_text(const Real& value, int digits) {
  return digits > 0 ? value.to_decimal(digits, MPFR_RNDZ) : value.to_string();
}

nlohmann::ordered_json to_json(const AgmTrace& trace, const PrecisionContext& ctx) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : trace.rows()) {
    rows.push_back({{"n", row.n},
                    {"a", text(row.a, ctx)},
                    {"b", text(row.b, ctx)},
                    {"c", text(row.c, ctx)}});
  }
  return {{"kind", std::string(to_string(trace.kind()))},
          {"rows", std::move(rows)},
          {"limit", text(trace.limit(), ctx)},
          {"iterations", trace.iterations()},
          {"bits", ctx.bits()}};
}

std::string to_csv(const AgmTrace& trace, const PrecisionContext& ctx) {
  std::ostringstream out;
  out << "n,a,b,c\n";
  for (const auto& row : trace.rows()) {
    out << row.n << ',' << text(row.a, ctx) << ',' << text(row.b, ctx) << ',' << text(row.c, ctx)
        << '\n';
  }
  const std::string limit = text(trace.limit(), ctx);
  out << "limit," << limit << ',' << limit << ",0\n";
  return out.str();
}

nlohmann::ordered_json to_json(const DigitsResult& result) {
  return {{"method", std::string(to_string(result.method))},
          {"digits", result.requested_digits},
          {"value", digits_text(result.value, result.requested_digits)},
          {"iterations", result.iterations_used},
          {"bits", result.bits}};
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.inputs) inputs[name] = value.to_string();
  return {{"identity", std::string(to_string(report.id))},
          {"inputs", std::move(inputs)},
          {"lhs", report.lhs.to_string()},
          {"rhs", report.rhs.to_string()},
          {"abs_defect", report.abs_defect.to_scientific(6)},
          {"rel_defect", report.rel_defect.to_scientific(6)},
          {"tol", report.tol.to_scientific(6)},
          {"pass", report.pass}};
}

nlohmann::ordered_json to_json(std::span<const IdentityReport> reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& report : reports) out.push_back(to_json(report));
  return out;
}

}  // namespace pell
