#include <doctest.h>

#include <thread>
#include <vector>

#include "pell/elementary.hpp"
#include "pell/errors.hpp"
#include "pell/precision.hpp"
#include "pell/quadrature.hpp"
#include "pell/real.hpp"
#include "pell/summation.hpp"
#include "support.hpp"

using namespace pell;
using pell::test::newton_root;

TEST_SUITE("real") {
  TEST_CASE("parsing and formatting") {
    const Real x("0.7", 128);
    CHECK(x.prec() == 128);
    CHECK(x.to_decimal(5) == "0.70000");
    CHECK(Real("-12.5", 64).to_decimal(4) == "-12.50");
    CHECK(Real("1e-40", 64).to_decimal(3) == "1.00e-40");
    CHECK(Real(2L, 64).to_scientific(3) == "2.00e+00");
    CHECK_THROWS_AS(Real("abc", 64), DomainError);
    CHECK_THROWS_AS(Real("1.5x", 64), DomainError);
  }

  TEST_CASE("truncation versus rounding") {
    const Real two_thirds = Real(2L, 128) / 3;
    CHECK(two_thirds.to_decimal(4) == "0.6667");
    CHECK(two_thirds.to_decimal(4, MPFR_RNDZ) == "0.6666");
  }

  TEST_CASE("mixed precision arithmetic rounds to the wider operand") {
    const Real a(1L, 64);
    const Real b(3L, 256);
    CHECK((a / b).prec() == 256);
    CHECK((a + 1).prec() == 64);
  }

  TEST_CASE("power of two scaling is exact") {
    const Real x("0.3", 100);
    CHECK(ldexp(ldexp(x, 500), -500) == x);
    CHECK(pow2(-200, 64) * pow2(200, 64) == 1);
  }
}

TEST_SUITE("precision") {
  TEST_CASE("defaults") {
    const PrecisionContext ctx(256);
    CHECK(ctx.bits() == 256);
    CHECK(ctx.working_bits() == 256 + PrecisionContext::kGuardBits);
    CHECK(ctx.quad_tol() == pow2(10 - 256, 64));
    CHECK(ctx.max_quad_level() == 12);
    CHECK(ctx.max_iters() == 64);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(PrecisionContext(63), DomainError);
    CHECK_THROWS_AS(PrecisionContext(128, Real(0L, 64), 12, 64), DomainError);
    CHECK_THROWS_AS(PrecisionContext(128, Real(1L, 64), 12, 64), DomainError);
    CHECK_THROWS_AS(PrecisionContext(128, pow2(-100, 64), 0, 64), DomainError);
    CHECK_THROWS_AS(PrecisionContext(128, pow2(-100, 64), 12, 0), DomainError);
  }

  TEST_CASE("digits to bits keeps a 16-bit margin") {
    CHECK(PrecisionContext::bits_for_digits(1) == 64);
    CHECK(PrecisionContext::bits_for_digits(100) == 349);
    CHECK(PrecisionContext::for_digits(145).bits() >= 145 * 3.3219 + 16);
  }
}

TEST_SUITE("elementary") {
  TEST_CASE("nth_root(16, 4) = 2") { CHECK(nth_root(Real(16L, 256), 4) == 2); }

  TEST_CASE("sin(pi/2) = 1") {
    const Real s = sin(ldexp(pi(256), -1));
    CHECK(abs(s - 1) <= pow2(-250, 256));
  }

  TEST_CASE("pow(2, -1/4) against a Newton oracle") {
    const Precision prec = 256;
    const Real value = pow(Real(2L, prec), Real(-1L, prec) / 4);
    const Real oracle = 1 / newton_root(Real(2L, prec), 4, prec + 32);
    CHECK(abs(value - oracle) <= pow2(-250, prec));
    CHECK(value.to_decimal(16) == "0.8408964152537145");
  }

  TEST_CASE("roots agree with Newton") {
    for (const long n : {2L, 3L, 5L, 7L}) {
      const Real x("3.25", 200);
      CHECK(abs(nth_root(x, n) - newton_root(x, n, 240)) <= pow2(-195, 200));
    }
    CHECK(abs(sqrt(Real(2L, 200)) - newton_root(Real(2L, 200), 2, 240)) <= pow2(-196, 200));
    CHECK(abs(cbrt(Real(-8L, 100)) + 2) <= pow2(-95, 100));
  }

  TEST_CASE("exp and log are inverse") {
    const Real x("1.2345", 192);
    CHECK(abs(log(exp(x)) - x) <= pow2(-185, 192));
    CHECK(abs(log1p(expm1(x)) - x) <= pow2(-185, 192));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(log(Real(0L, 64)), DomainError);
    CHECK_THROWS_AS(sqrt(Real(-1L, 64)), DomainError);
    CHECK_THROWS_AS(nth_root(Real(-1L, 64), 4), DomainError);
    CHECK_THROWS_AS(pow(Real(-2L, 64), Real("0.5", 64)), DomainError);
    CHECK_THROWS_AS(log1p(Real(-1L, 64)), DomainError);
  }
}

TEST_SUITE("summation") {
  TEST_CASE("empty sum is zero") {
    CHECK(sum_ordered({}, 128).is_zero());
  }

  TEST_CASE("cancelling pair") {
    const std::vector<Real> terms = {Real(1L, 128), Real(-1L, 128)};
    CHECK(sum_ordered(terms, 128).is_zero());
  }

  TEST_CASE("repeated power of two is exact") {
    const std::vector<Real> terms(1024, pow2(-200, 256));
    CHECK(sum_ordered(terms, 256) == pow2(-190, 256));
  }

  TEST_CASE("compensation recovers a small term lost to rounding") {
    const Precision prec = 64;
    const std::vector<Real> terms = {Real(1L, prec), pow2(-80, prec), Real(-1L, prec)};
    CHECK(sum_ordered(terms, prec) == pow2(-80, prec));
  }
}

TEST_SUITE("quadrature") {
  const PrecisionContext ctx(256);

  TEST_CASE("constant integrand") {
    const QuadResult r = integrate([](const Real& t) { return Real(1L, t.prec()); },
                                   Real(0L, 256), Real(1L, 256), ctx);
    CHECK(abs(r.value - 1) <= ctx.quad_tol());
    CHECK(r.err_estimate >= 0);
    CHECK(r.levels_used <= ctx.max_quad_level());
    CHECK(r.evaluations > 0);
  }

  TEST_CASE("arcsine integrand gives pi/2") {
    auto f = [](const Abscissa& n) { return 1 / sqrt(n.to_hi * (1 + n.t)); };
    const QuadResult r = integrate(f, Real(0L, 256), Real(1L, 256), ctx);
    CHECK(abs(r.value - ldexp(pi(256), -1)) <= ctx.quad_tol());
  }

  TEST_CASE("(1 - t^4)^(-1/4) gives pi_4/2") {
    auto f = [](const Abscissa& n) {
      const Real t2 = n.t * n.t;
      return 1 / nth_root(n.to_hi * (1 + n.t) * (1 + t2), 4);
    };
    const QuadResult r = integrate(f, Real(0L, 256), Real(1L, 256), ctx);
    const Real expected = pi(300) / (2 * sqrt(Real(2L, 300)));
    CHECK(abs(r.value - expected) <= ctx.quad_tol());
    CHECK(r.value.to_decimal(13) == "1.110720734540");
  }

  TEST_CASE("additivity") {
    auto f = [](const Real& t) { return exp(t) * cos(3 * t); };
    const Real a(0L, 256);
    const Real b("0.4", 256);
    const Real c("1.3", 256);
    const Real whole = integrate(f, a, c, ctx).value;
    const Real parts = integrate(f, a, b, ctx).value + integrate(f, b, c, ctx).value;
    CHECK(abs(whole - parts) <= 4 * ctx.quad_tol());
  }

  TEST_CASE("odd integrand over a symmetric interval") {
    auto f = [](const Real& t) { return t * t * t * exp(t * t); };
    const QuadResult r = integrate(f, Real(-1L, 256), Real(1L, 256), ctx);
    CHECK(abs(r.value) <= ctx.quad_tol());
  }

  TEST_CASE("parallel and serial kernels are bit-identical") {
    auto f = [](const Abscissa& n) { return log1p(n.t) / nth_root(n.to_hi, 3); };
    const QuadResult par = integrate(f, Real(0L, 256), Real(1L, 256), ctx);
    const QuadResult ser = serial::integrate(f, Real(0L, 256), Real(1L, 256), ctx);
    CHECK(par.value == ser.value);
    CHECK(par.err_estimate == ser.err_estimate);
    CHECK(par.levels_used == ser.levels_used);
    CHECK(par.evaluations == ser.evaluations);
  }

  TEST_CASE("repeated and concurrent calls are deterministic") {
    auto f = [](const Real& t) { return sqrt(t) * sin(t); };
    const Real first = integrate(f, Real(0L, 256), Real(2L, 256), ctx).value;
    std::vector<Real> results(4, Real(256));
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
      threads.emplace_back([&, i] {
        results[i] = integrate(f, Real(0L, 256), Real(2L, 256), ctx).value;
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == first);
  }

  TEST_CASE("more bits never loses accuracy on a known integral") {
    auto f = [](const Abscissa& n) { return 1 / sqrt(n.to_hi * (1 + n.t)); };
    Real previous(1L, 64);
    for (const long bits : {64L, 128L, 256L, 512L}) {
      const PrecisionContext c(bits);
      const Real err = abs(integrate(f, Real(0L, bits), Real(1L, bits), c).value -
                           ldexp(pi(bits + 64), -1));
      CHECK(err <= previous);
      previous = err;
    }
  }

  TEST_CASE("errors") {
    auto one = [](const Real& t) { return Real(1L, t.prec()); };
    CHECK_THROWS_AS(integrate(one, Real(1L, 64), Real(1L, 64), ctx), InvalidDomain);
    CHECK_THROWS_AS(integrate(one, Real(2L, 64), Real(1L, 64), ctx), InvalidDomain);

    auto poisoned = [](const Real& t) {
      Real r(t.prec());
      if (t > Real("0.5", 64)) mpfr_set_nan(r.get());
      return r;
    };
    CHECK_THROWS_AS(integrate(poisoned, Real(0L, 64), Real(1L, 64), ctx), NonFinite);

    const PrecisionContext shallow(256, pow2(-250, 64), 3, 64);
    auto rough = [](const Real& t) { return sin(200 * t); };
    CHECK_THROWS_AS(integrate(rough, Real(0L, 256), Real(1L, 256), shallow), NonConvergence);
  }
}
