#include "pell/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <new>
#include <string>

#include "pell/errors.hpp"

namespace pell {

namespace {

Precision wider(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

struct MpfrStringDeleter {
  void operator()(char* s) const { mpfr_free_str(s); }
};

}  // namespace

Real::Real(std::string_view text, Precision prec) : Real(prec) {
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(v_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (owned.empty() || end == owned.c_str() || *end != '\0' || !is_finite()) {
    throw DomainError("not a decimal number: '" + owned + "'");
  }
}

long Real::exponent() const {
  if (!mpfr_regular_p(v_)) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

std::string Real::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  digits = std::max(digits, 1);
  if (is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  }

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, MpfrStringDeleter> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v_, rnd));
  std::string mantissa(raw.get());
  std::string sign_str;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign_str = "-";
    mantissa.erase(0, 1);
  }

  // Value is 0.<mantissa> * 10^exp10.
  std::string out;
  if (exp10 > 0 && exp10 <= 64) {
    const auto e = static_cast<std::size_t>(exp10);
    if (mantissa.size() <= e) {
      out = mantissa + std::string(e - mantissa.size(), '0');
    } else {
      out = mantissa.substr(0, e) + "." + mantissa.substr(e);
    }
  } else if (exp10 <= 0 && exp10 > -32) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mantissa;
  } else {
    out = mantissa.substr(0, 1);
    if (mantissa.size() > 1) out += "." + mantissa.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  }
  return sign_str + out;
}

std::string Real::to_scientific(int digits) const {
  if (is_zero()) return "0";
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Re", std::max(digits, 1) - 1, v_) < 0) {
    throw std::bad_alloc();
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string Real::to_string() const {
  const auto digits = static_cast<int>(mpfr_get_str_ndigits(10, prec()));
  return to_decimal(digits);
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(v_, rhs.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(v_, rhs.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(v_, rhs.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  if (rhs.prec() > prec()) mpfr_prec_round(v_, rhs.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
const Real& min(const Real& a, const Real& b) { return (b < a) ? b : a; }

Real pow2(long e, Precision prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

}  // namespace pell
