#include "pell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "pell/agm.hpp"
#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/pelliptic.hpp"
#include "pell/piformulas.hpp"
#include "pell/ptrig.hpp"
#include "pell/serialize.hpp"

namespace pell {

namespace {

constexpr long kDefaultBits = 256;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<long> bits;
  std::optional<int> digits;
  bool json = false;
  bool csv = false;

  std::string method;
  bool times_sqrt2 = false;
  std::optional<std::string> p;
  std::string via = "closed";
  std::string identity;
  std::optional<std::string> k;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::string kind;
  std::string trace_a;
  std::string trace_b;
};

long env_bits() {
  const char* raw = std::getenv("PELL_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultBits;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0') throw UsageError(std::string("PELL_BITS is not an integer: ") + raw);
  return value;
}

PrecisionContext resolve_context(const Options& opt) {
  if (opt.digits && *opt.digits < 1) throw UsageError("--digits must be at least 1");
  long bits = 0;
  if (opt.bits) {
    bits = *opt.bits;
    if (opt.digits && PrecisionContext::bits_for_digits(*opt.digits) > bits) {
      throw UsageError("--digits " + std::to_string(*opt.digits) + " needs --bits of at least " +
                       std::to_string(PrecisionContext::bits_for_digits(*opt.digits)));
    }
  } else if (opt.digits) {
    bits = PrecisionContext::bits_for_digits(*opt.digits);
  } else {
    bits = env_bits();
  }
  if (bits < PrecisionContext::kMinBits) {
    throw UsageError("bits must be at least " + std::to_string(PrecisionContext::kMinBits));
  }
  return PrecisionContext(bits);
}

// Digits the context supports once its 16-bit margin is set aside.
int default_digits(const PrecisionContext& ctx) {
  return static_cast<int>(std::floor(static_cast<double>(ctx.bits() - 16) * std::log10(2.0)));
}

int output_digits(const Options& opt, const PrecisionContext& ctx) {
  return opt.digits ? *opt.digits : default_digits(ctx);
}

void reject_csv(const Options& opt, std::string_view command) {
  if (opt.csv) throw UsageError("--csv is not available for " + std::string(command));
}

int cmd_pi(const Options& opt, std::ostream& out) {
  reject_csv(opt, "pi");
  static const std::map<std::string, PiMethod> kMethods = {
      {"machin", PiMethod::kMachin},
      {"salamin-brent", PiMethod::kSalaminBrent},
      {"pi4", PiMethod::kPi4},
  };
  PiMethod method = kMethods.at(opt.method);
  if (opt.times_sqrt2) {
    if (method != PiMethod::kPi4) throw UsageError("--times-sqrt2 applies to --method pi4 only");
    method = PiMethod::kPiViaPi4;
  }
  const PrecisionContext ctx = resolve_context(opt);
  const DigitsResult result = compute_pi(method, ctx, output_digits(opt, ctx));
  if (opt.json) {
    out << to_json(result).dump(2) << '\n';
  } else {
    out << digits_text(result.value, result.requested_digits) << '\n';
  }
  return kExitOk;
}

int cmd_pip(const Options& opt, std::ostream& out) {
  reject_csv(opt, "pip");
  const PrecisionContext ctx = resolve_context(opt);
  const PExponent p(*opt.p, ctx.working_bits());
  const int digits = output_digits(opt, ctx);
  Real value(ctx.bits());
  if (opt.via == "agm") {
    if (p.integer() == 3) {
      value = pi3_formula(ctx, digits).value;
    } else if (p.integer() == 4) {
      value = pi4_formula(ctx, digits).value;
    } else {
      throw UsageError("--via agm is available for p = 3 and p = 4 only");
    }
  } else {
    require_digits(digits, ctx);
    value = pi_p(p, ctx);
  }
  const std::string text = digits_text(value, digits);
  if (opt.json) {
    const nlohmann::ordered_json doc = {{"p", Real(p.value(), ctx.bits()).to_string()},
                                {"via", opt.via},
                                {"digits", digits},
                                {"value", text},
                                {"bits", ctx.bits()}};
    out << doc.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

const std::vector<std::string> kGridK = {"0.1", "0.3", "0.5", "0.7", "0.9"};
const std::vector<std::string> kGridP = {"2", "2.5", "3", "4"};
const std::vector<std::string> kGridX = {"0", "0.1", "0.2", "0.3", "0.4", "0.5"};

struct Grid {
  const Options& opt;
  const PrecisionContext& ctx;

  [[nodiscard]] Real parse(const std::string& text) const { return ctx.parse(text); }

  [[nodiscard]] std::vector<Real> ks() const {
    std::vector<Real> out;
    if (opt.k) {
      out.push_back(parse(*opt.k));
    } else {
      for (const auto& k : kGridK) out.push_back(parse(k));
    }
    return out;
  }

  [[nodiscard]] std::vector<PExponent> ps() const {
    std::vector<PExponent> out;
    if (opt.p) {
      out.emplace_back(*opt.p, ctx.working_bits());
    } else {
      for (const auto& p : kGridP) out.emplace_back(p, ctx.working_bits());
    }
    return out;
  }

  [[nodiscard]] std::vector<MeanKind> kinds() const {
    if (!opt.p) return {MeanKind::kP2, MeanKind::kP3, MeanKind::kP4};
    switch (PExponent(*opt.p, ctx.working_bits()).integer()) {
      case 2: return {MeanKind::kP2};
      case 3: return {MeanKind::kP3};
      case 4: return {MeanKind::kP4};
      default: throw UsageError("this identity needs --p 2, 3 or 4");
    }
  }

  [[nodiscard]] std::vector<std::pair<Real, Real>> pairs() const {
    if (opt.a.has_value() != opt.b.has_value()) throw UsageError("--a and --b go together");
    if (opt.a) return {{parse(*opt.a), parse(*opt.b)}};
    const Precision wp = ctx.working_bits();
    return {{Real(1L, wp), 1 / nth_root(Real(2L, wp), 4)},
            {Real(1L, wp), parse("0.5")},
            {parse("1.5"), parse("0.5")}};
  }

  void require_quartic() const {
    if (opt.p && PExponent(*opt.p, ctx.working_bits()).integer() != 4) {
      throw UsageError("this identity is stated for p = 4 only");
    }
  }
};

using Reports = std::vector<IdentityReport>;

Reports run_identity(const std::string& name, const Grid& grid) {
  const PrecisionContext& ctx = grid.ctx;
  Reports reports;

  if (name == "legendre") {
    for (const auto& p : grid.ps()) {
      for (const auto& k : grid.ks()) reports.push_back(legendre_defect(p, k, ctx));
    }
  } else if (name.starts_with("landen-")) {
    static const std::map<std::string, LandenForm> kForms = {{"landen-i", LandenForm::kI},
                                                             {"landen-ii", LandenForm::kII},
                                                             {"landen-iii", LandenForm::kIII},
                                                             {"landen-iv", LandenForm::kIV}};
    grid.require_quartic();
    const LandenForm form = kForms.at(name);
    for (const auto& k : grid.ks()) reports.push_back(landen_check(form, k, ctx));
  } else if (name == "lemma-ij") {
    grid.require_quartic();
    for (const auto& [a, b] : grid.pairs()) {
      for (int n = 0; n < 3; ++n) reports.push_back(lemma_ij_check(a, b, n, ctx));
    }
  } else if (name == "invariance") {
    for (const MeanKind kind : grid.kinds()) {
      for (const auto& [a, b] : grid.pairs()) {
        reports.push_back(invariance_check(kind, a, b, 3, ctx));
      }
    }
  } else if (name == "prop-ek") {
    grid.require_quartic();
    for (const auto& [a, b] : grid.pairs()) reports.push_back(prop_ek_check(a, b, ctx));
  } else if (name == "contraction") {
    grid.require_quartic();
    for (const auto& [a, b] : grid.pairs()) {
      reports.push_back(contraction_check(run_mean(MeanKind::kP4, a, b, ctx), ctx));
    }
  } else if (name == "homogeneity") {
    const Real c = grid.parse("2.5");
    for (const MeanKind kind : grid.kinds()) {
      for (const auto& [a, b] : grid.pairs()) {
        reports.push_back(homogeneity_check(kind, a, b, c, ctx));
      }
    }
  } else if (name == "ode") {
    for (const auto& p : grid.ps()) {
      for (const auto& k : grid.ks()) {
        const Modulus m(p, k, ctx);
        for (const auto which : {OdeSolution::kK, OdeSolution::kKPrime, OdeSolution::kE,
                                 OdeSolution::kEPrimeMinusKPrime}) {
          reports.push_back(ode_residual(which, m, ctx));
        }
      }
    }
  } else if (name == "hypergeometric") {
    const Real limit = grid.parse("0.75");
    for (const auto& p : grid.ps()) {
      for (const auto& k : grid.ks()) {
        const Modulus m(p, k, ctx);
        if (m.k_pow() > limit) continue;
        reports.push_back(hypergeometric_check(false, m, ctx));
        reports.push_back(hypergeometric_check(true, m, ctx));
      }
    }
  } else if (name == "ramanujan") {
    for (const auto& x : kGridX) reports.push_back(ramanujan_defect(grid.parse(x), ctx));
  } else if (name == "gauss-p2" || name == "k3-formula" || name == "k4-formula") {
    const MeanKind kind = name == "gauss-p2"     ? MeanKind::kP2
                          : name == "k3-formula" ? MeanKind::kP3
                                                 : MeanKind::kP4;
    for (const auto& k : grid.ks()) reports.push_back(gauss_formula_check(kind, k, ctx));
  } else {
    throw UsageError("unknown identity " + name);
  }
  return reports;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  reject_csv(opt, "verify");
  const PrecisionContext ctx = resolve_context(opt);
  const Reports reports = run_identity(opt.identity, Grid{opt, ctx});
  if (opt.json) {
    out << to_json(std::span<const IdentityReport>(reports)).dump(2) << '\n';
  } else {
    for (const auto& report : reports) out << format_report(report) << '\n';
  }
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_trace(const Options& opt, std::ostream& out) {
  if (opt.json && opt.csv) throw UsageError("--json and --csv are exclusive");
  const PrecisionContext ctx = resolve_context(opt);
  static const std::map<std::string, MeanKind> kKinds = {
      {"p2", MeanKind::kP2}, {"p3", MeanKind::kP3}, {"p4", MeanKind::kP4}};
  const AgmTrace trace =
      run_mean(kKinds.at(opt.kind), ctx.parse(opt.trace_a), ctx.parse(opt.trace_b), ctx);
  if (opt.json) {
    out << to_json(trace, ctx).dump(2) << '\n';
  } else if (opt.csv) {
    out << to_csv(trace, ctx);
  } else {
    const int digits = output_digits(opt, ctx);
    for (const auto& row : trace.rows()) {
      out << row.n << ' ' << digits_text(ctx.finish(row.a), digits) << ' '
          << digits_text(ctx.finish(row.b), digits) << ' '
          << digits_text(ctx.finish(row.c), digits) << '\n';
    }
    out << "limit " << digits_text(ctx.finish(trace.limit()), digits) << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--bits", opt.bits, "Precision in bits (>= 64)");
  cmd->add_option("--digits", opt.digits, "Significant decimal digits");
  auto* json = cmd->add_flag("--json", opt.json, "JSON output");
  auto* csv = cmd->add_flag("--csv", opt.csv, "CSV output");
  json->excludes(csv);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Generalized trigonometric functions, p-elliptic integrals and AGM pi formulas",
               "pell"};
  app.require_subcommand(1, 1);

  auto* pi_cmd = app.add_subcommand("pi", "Digits of pi");
  add_common(pi_cmd, opt);
  pi_cmd->add_option("--method", opt.method, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"machin", "salamin-brent", "pi4"}));
  pi_cmd->add_flag("--times-sqrt2", opt.times_sqrt2, "Scale pi_4 by sqrt(2) to obtain pi");

  auto* pip_cmd = app.add_subcommand("pip", "The generalized constant pi_p");
  add_common(pip_cmd, opt);
  pip_cmd->add_option("--p", opt.p, "Exponent p > 1")->required();
  pip_cmd->add_option("--via", opt.via, "closed (default) or agm")
      ->check(CLI::IsMember({"closed", "agm"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity on a grid of inputs");
  add_common(verify_cmd, opt);
  verify_cmd->add_option("--identity", opt.identity, "Identity name")->required();
  verify_cmd->add_option("--p", opt.p, "Exponent p");
  verify_cmd->add_option("--k", opt.k, "Modulus k");
  verify_cmd->add_option("--a", opt.a, "Mean argument a");
  verify_cmd->add_option("--b", opt.b, "Mean argument b");

  auto* trace_cmd = app.add_subcommand("trace", "Rows of a mean iteration");
  add_common(trace_cmd, opt);
  trace_cmd->add_option("kind", opt.kind, "p2, p3 or p4")
      ->required()
      ->check(CLI::IsMember({"p2", "p3", "p4"}));
  trace_cmd->add_option("a", opt.trace_a, "Start value a")->required();
  trace_cmd->add_option("b", opt.trace_b, "Start value b <= a")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pi_cmd->parsed()) return cmd_pi(opt, out);
    if (pip_cmd->parsed()) return cmd_pip(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
    return cmd_trace(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace pell
