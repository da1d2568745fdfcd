#include <doctest.h>

#include <vector>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/pelliptic.hpp"
#include "pell/ptrig.hpp"
#include "support.hpp"

using namespace pell;

namespace {

const PrecisionContext ctx(256);
constexpr Precision kWp = 288;

Real r(const char* text) { return Real(text, kWp); }
PExponent exponent(const char* text) { return PExponent(text, kWp); }
Modulus modulus(const char* p, const Real& k) { return Modulus(exponent(p), k, ctx); }

// Classical AGM by its textbook loop.
Real agm2(Real a, Real b) {
  for (int i = 0; i < 20; ++i) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next_a);
  }
  return a;
}

// The quartic mean written out directly from its recurrence.
Real agm4(Real a, Real b) {
  for (int i = 0; i < 20; ++i) {
    const Real a2 = a * a;
    const Real b2 = b * b;
    Real next_a = sqrt((a2 + 3 * b2) / 4);
    b = nth_root((a2 + b2) * b2 / 2, 4);
    a = std::move(next_a);
  }
  return a;
}

const Real kInvSqrt2 = 1 / sqrt(Real(2L, kWp));
const Real kInvRoot4Of2 = 1 / nth_root(Real(2L, kWp), 4);

}  // namespace

TEST_SUITE("modulus") {
  TEST_CASE("complement satisfies k^p + k'^p = 1") {
    for (const char* p : {"2", "2.5", "3", "4"}) {
      const Modulus m = modulus(p, r("0.6"));
      const Real pw(m.p().value(), kWp);
      CHECK_CLOSE(pow(m.k(), pw) + pow(m.k_comp(), pw), Real(1L, kWp), ctx.ulps(2));
      CHECK_CLOSE(m.k_pow() + m.k_comp_pow(), Real(1L, kWp), ctx.ulps(2));
      CHECK_CLOSE(m.complementary().k_comp(), m.k(), ctx.ulps(2));
    }
  }

  TEST_CASE("range") {
    CHECK_THROWS_AS(modulus("2", r("-0.1")), DomainError);
    CHECK_THROWS_AS(modulus("2", r("1.1")), DomainError);
    CHECK_NOTHROW(modulus("2", r("1")));
  }
}

TEST_SUITE("integrals") {
  TEST_CASE("values at k = 0 are pi_p/2") {
    for (const char* p : {"2", "2.5", "3", "4"}) {
      const Real half = pi_p(exponent(p), ctx) / 2;
      CHECK_CLOSE(elliptic_k(modulus(p, r("0")), ctx), half, ctx.quad_tol());
      CHECK_CLOSE(elliptic_e(modulus(p, r("0")), ctx), half, ctx.quad_tol());
    }
    CHECK(elliptic_k(modulus("4", r("0")), ctx).to_decimal(16, MPFR_RNDZ) == "1.110720734539591");
  }

  TEST_CASE("E at k = 1 is 1; K diverges there") {
    CHECK_CLOSE(elliptic_e(modulus("4", r("1")), ctx), Real(1L, kWp), ctx.quad_tol());
    CHECK_CLOSE(elliptic_e(modulus("2.5", r("1")), ctx), Real(1L, kWp), ctx.quad_tol());
    CHECK_THROWS_AS(elliptic_k(modulus("4", r("1")), ctx), DomainError);
  }

  TEST_CASE("p = 2 at k = 1/sqrt 2 against the Gauss formula") {
    const Modulus m = Modulus(PExponent(2L), kInvSqrt2, ctx);
    const Real k_oracle = pi(kWp) / (2 * agm2(Real(1L, kWp), kInvSqrt2));
    const Real k_val = elliptic_k(m, ctx);
    CHECK_CLOSE(k_val, k_oracle, ctx.quad_tol());
    CHECK(k_val.to_decimal(16, MPFR_RNDZ) == "1.854074677301371");

    // At the symmetric point the Legendre relation gives E = K/2 + pi/(4K).
    const Real e_oracle = k_oracle / 2 + pi(kWp) / (4 * k_oracle);
    const Real e_val = elliptic_e(m, ctx);
    CHECK_CLOSE(e_val, e_oracle, ctx.quad_tol());
    CHECK(e_val.to_decimal(16, MPFR_RNDZ) == "1.350643881047675");
  }

  TEST_CASE("p = 4, k = 1/2 against the quartic mean") {
    const Real k_comp = nth_root(r("15") / 16, 4);
    const Real oracle = pi_p(PExponent(4L), ctx) / 2 / agm4(Real(1L, kWp), k_comp);
    CHECK_CLOSE(elliptic_k(modulus("4", r("0.5")), ctx), oracle, ctx.quad_tol());
  }

  TEST_CASE("I and J examples") {
    const PExponent p4(4L);
    const PExponent p3(3L);
    const Real one(1L, kWp);
    const Real two(2L, kWp);
    CHECK_CLOSE(integral_i(one, one, p4, ctx), pi_p(p4, ctx) / 2, ctx.quad_tol());
    CHECK_CLOSE(integral_j(one, one, p3, ctx), pi_p(p3, ctx) / 2, ctx.quad_tol());
    // (pi_3/2) 2^(1-3) = pi_3/8
    CHECK_CLOSE(integral_i(two, two, p3, ctx), pi_p(p3, ctx) / 8, ctx.quad_tol());

    for (const char* p : {"2.5", "4"}) {
      const Modulus m = modulus(p, r("0.7"));
      CHECK_CLOSE(integral_i(one, m.k_comp(), m.p(), ctx), elliptic_k(m, ctx), ctx.quad_tol());
      CHECK_CLOSE(integral_j(one, m.k_comp(), m.p(), ctx), elliptic_e(m, ctx), ctx.quad_tol());
      const Real c = r("3");
      CHECK_CLOSE(integral_j(c, c * m.k_comp(), m.p(), ctx), c * elliptic_e(m, ctx),
                  4 * ctx.quad_tol());
    }
    CHECK_THROWS_AS(integral_i(Real(0L, kWp), one, p4, ctx), DomainError);
    CHECK_THROWS_AS(integral_j(one, Real(-1L, kWp), p4, ctx), DomainError);
  }

  TEST_CASE("homogeneity of I and J") {
    const Real a = r("1.3");
    const Real b = r("0.4");
    for (const char* p : {"2", "2.5", "3", "4"}) {
      const PExponent pe = exponent(p);
      const Real pw(pe.value(), kWp);
      const Real i0 = integral_i(a, b, pe, ctx);
      const Real j0 = integral_j(a, b, pe, ctx);
      for (const char* cs : {"0.5", "2"}) {
        const Real c = r(cs);
        CAPTURE(p);
        CAPTURE(cs);
        CHECK_CLOSE(integral_i(c * a, c * b, pe, ctx), pow(c, 1 - pw) * i0, 4 * ctx.quad_tol());
        CHECK_CLOSE(integral_j(c * a, c * b, pe, ctx), c * j0, 4 * ctx.quad_tol());
      }
    }
  }

  TEST_CASE("K increases and E decreases in k") {
    for (const char* p : {"2", "3", "4"}) {
      Real k_prev(0L, kWp);
      Real e_prev(100L, kWp);
      for (const char* ks : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        const Modulus m = modulus(p, r(ks));
        const Real kv = elliptic_k(m, ctx);
        const Real ev = elliptic_e(m, ctx);
        CHECK(kv > k_prev);
        CHECK(ev < e_prev);
        k_prev = kv;
        e_prev = ev;
      }
    }
  }
}

TEST_SUITE("derivatives") {
  TEST_CASE("signs") {
    CHECK(elliptic_e_derivative(modulus("2", r("0.4")), ctx) < 0);
    CHECK(elliptic_k_derivative(modulus("4", r("0.9")), ctx) > 0);
    CHECK_THROWS_AS(elliptic_k_derivative(modulus("4", r("0")), ctx), DomainError);
    CHECK_THROWS_AS(elliptic_e_derivative(modulus("4", r("0")), ctx), DomainError);
  }

  TEST_CASE("closed forms agree with central differences") {
    const PrecisionContext fd(192);
    const Real h = fd_step(fd);
    // O(h^2) truncation plus quadrature noise amplified by 1/h.
    const Real tol = 64 * h * h + fd.quad_tol() / h;
    for (const char* p : {"2", "3", "4"}) {
      const PExponent pe = exponent(p);
      for (const char* ks : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        const Real k(ks, fd.working_bits());
        const Modulus m(pe, k, fd);
        const Modulus up(pe, k + h, fd);
        const Modulus down(pe, k - h, fd);
        const Real dk = (elliptic_k(up, fd) - elliptic_k(down, fd)) / (2 * h);
        const Real de = (elliptic_e(up, fd) - elliptic_e(down, fd)) / (2 * h);
        CAPTURE(p);
        CAPTURE(ks);
        CHECK_CLOSE(dk, elliptic_k_derivative(m, fd), tol);
        CHECK_CLOSE(de, elliptic_e_derivative(m, fd), tol);
      }
    }
  }

  TEST_CASE("p = 2 at k = 1/sqrt 2: dE/dk = (E - K)/k") {
    const Modulus m(PExponent(2L), kInvSqrt2, ctx);
    const Real expected = (elliptic_e(m, ctx) - elliptic_k(m, ctx)) / kInvSqrt2;
    CHECK_CLOSE(elliptic_e_derivative(m, ctx), expected, 4 * ctx.quad_tol());
  }
}

TEST_SUITE("ode") {
  TEST_CASE("residual examples") {
    CHECK(ode_residual(OdeSolution::kK, modulus("2", r("0.5")), ctx).pass);
    CHECK(ode_residual(OdeSolution::kE, modulus("4", r("0.5")), ctx).pass);
    CHECK(ode_residual(OdeSolution::kEPrimeMinusKPrime, modulus("3", r("0.3")), ctx).pass);
  }

  TEST_CASE("residual is zero to discretization order on the grid") {
    const PrecisionContext c(128);
    for (const char* p : {"2", "3", "4"}) {
      for (const char* ks : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        const Modulus m(exponent(p), Real(ks, c.working_bits()), c);
        for (const auto which : {OdeSolution::kK, OdeSolution::kKPrime, OdeSolution::kE,
                                 OdeSolution::kEPrimeMinusKPrime}) {
          const IdentityReport rep = ode_residual(which, m, c);
          CAPTURE(format_report(rep));
          CHECK(rep.pass);
        }
      }
    }
  }

  TEST_CASE("endpoints are rejected") {
    CHECK_THROWS_AS(ode_residual(OdeSolution::kK, modulus("2", pow2(-100, kWp)), ctx),
                    DomainError);
    CHECK_THROWS_AS(ode_residual(OdeSolution::kE, modulus("2", 1 - pow2(-100, kWp)), ctx),
                    DomainError);
  }
}

TEST_SUITE("legendre") {
  TEST_CASE("examples") {
    CHECK(legendre_defect(PExponent(2L), kInvSqrt2, ctx).pass);
    CHECK(legendre_defect(PExponent(4L), kInvRoot4Of2, ctx).pass);
    const IdentityReport rep = legendre_defect(exponent("2.5"), r("0.3"), ctx);
    CHECK(rep.pass);
    CHECK(rep.abs_defect <= 8 * ctx.quad_tol());
  }

  TEST_CASE("defect is symmetric under k <-> k'") {
    for (const char* p : {"2.5", "3"}) {
      const Modulus m = modulus(p, r("0.4"));
      const IdentityReport a = legendre_defect(m.p(), m.k(), ctx);
      const IdentityReport b = legendre_defect(m.p(), m.k_comp(), ctx);
      CHECK_CLOSE(a.lhs, b.lhs, 8 * ctx.quad_tol());
    }
  }

  TEST_CASE("rejects k outside (0, 1)") {
    CHECK_THROWS_AS(legendre_defect(PExponent(2L), Real(0L, kWp), ctx), DomainError);
    CHECK_THROWS_AS(legendre_defect(PExponent(2L), Real(1L, kWp), ctx), DomainError);
  }
}

TEST_SUITE("hypergeometric") {
  TEST_CASE("series examples") {
    const Real half = r("0.5");
    CHECK(hyp2f1(half, half, Real(1L, kWp), Real(0L, kWp), ctx) == 1);

    const Real k2 = elliptic_k(Modulus(PExponent(2L), kInvSqrt2, ctx), ctx);
    CHECK_CLOSE(hyp2f1(half, half, Real(1L, kWp), half, ctx), 2 * k2 / pi(kWp),
                8 * ctx.quad_tol());

    const Real e4 = elliptic_e(Modulus(PExponent(4L), kInvRoot4Of2, ctx), ctx);
    const Real quarter = r("0.25");
    CHECK_CLOSE(hyp2f1(quarter, -quarter, Real(1L, kWp), half, ctx),
                2 * e4 / pi_p(PExponent(4L), ctx), 8 * ctx.quad_tol());
  }

  TEST_CASE("terminating series is a polynomial") {
    // F(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
    const Real b = r("0.5");
    const Real c = r("1.5");
    const Real x = r("0.3");
    const Real expected = 1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1));
    CHECK_CLOSE(hyp2f1(Real(-2L, kWp), b, c, x, ctx), expected, ctx.ulps(4));
  }

  TEST_CASE("route agreement with quadrature where k^p <= 3/4") {
    for (const char* p : {"2", "3", "4"}) {
      for (const char* ks : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        const Modulus m = modulus(p, r(ks));
        if (m.k_pow() > r("0.75")) continue;
        CAPTURE(p);
        CAPTURE(ks);
        CHECK(hypergeometric_check(false, m, ctx).pass);
        CHECK(hypergeometric_check(true, m, ctx).pass);
      }
    }
    CHECK_THROWS_AS(hypergeometric_check(false, modulus("2", r("0.9")), ctx), DomainError);
  }
}

TEST_SUITE("landen") {
  TEST_CASE("examples") {
    const IdentityReport fixed = landen_check(LandenForm::kII, Real(0L, kWp), ctx);
    CHECK(fixed.pass);
    CHECK_CLOSE(fixed.lhs, pi_p(PExponent(4L), ctx) / 2, ctx.quad_tol());
    CHECK(landen_check(LandenForm::kI, r("0.5"), ctx).pass);
    CHECK(landen_check(LandenForm::kIV, r("0.7"), ctx).pass);
  }

  TEST_CASE("all four forms on the grid") {
    for (const auto form : {LandenForm::kI, LandenForm::kII, LandenForm::kIII, LandenForm::kIV}) {
      for (const char* ks : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
        const IdentityReport rep = landen_check(form, r(ks), ctx);
        CAPTURE(format_report(rep));
        CHECK(rep.pass);
      }
    }
  }

  TEST_CASE("range") {
    CHECK_THROWS_AS(landen_check(LandenForm::kI, Real(1L, kWp), ctx), DomainError);
    CHECK_THROWS_AS(landen_check(LandenForm::kI, r("-0.2"), ctx), DomainError);
  }
}

TEST_SUITE("ramanujan") {
  TEST_CASE("x = 0 gives 1 on both sides") {
    const IdentityReport rep = ramanujan_defect(Real(0L, kWp), ctx);
    CHECK(rep.lhs == 1);
    CHECK(rep.rhs == 1);
    CHECK(rep.pass);
  }

  TEST_CASE("grid") {
    for (const char* xs : {"0.1", "0.2", "0.3", "0.4", "0.5"}) {
      const IdentityReport rep = ramanujan_defect(r(xs), ctx);
      CAPTURE(format_report(rep));
      CHECK(rep.pass);
      CHECK(rep.abs_defect <= series_tol(ctx));
    }
  }

  TEST_CASE("range") {
    CHECK_THROWS_AS(ramanujan_defect(r("0.51"), ctx), DomainError);
    CHECK_THROWS_AS(ramanujan_defect(r("-0.01"), ctx), DomainError);
  }
}
