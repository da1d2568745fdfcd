#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace pell {

using Precision = mpfr_prec_t;

// Arbitrary-precision binary floating-point value backed by MPFR.
//
// Every value carries its own precision. Arithmetic between two values rounds
// to the larger of the two precisions; arithmetic with a machine integer keeps
// the precision of the Real operand. All rounding is to nearest.
class Real {
 public:
  static constexpr Precision kDefaultPrecision = 64;

  Real() : Real(kDefaultPrecision) {}
  explicit Real(Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, Precision prec) : Real(prec) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(double value, Precision prec) : Real(prec) { mpfr_set_d(v_, value, MPFR_RNDN); }
  // Parses a decimal literal such as "0.7" or "1e-3"; throws DomainError on
  // malformed input.
  Real(std::string_view text, Precision prec);
  // Copies `other` rounded to `prec`.
  Real(const Real& other, Precision prec) : Real(prec) { mpfr_set(v_, other.v_, MPFR_RNDN); }

  Real(const Real& other) : Real(other.prec()) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  // Assignment adopts the precision of the source.
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.prec());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  [[nodiscard]] Precision prec() const { return mpfr_get_prec(v_); }
  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  [[nodiscard]] mpfr_ptr get() { return v_; }

  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Binary exponent e such that |x| lies in [2^(e-1), 2^e); very negative for 0.
  [[nodiscard]] long exponent() const;

  // Same value rounded to `prec` bits.
  [[nodiscard]] Real rounded(Precision prec) const { return Real(*this, prec); }

  // `digits` significant decimal digits in positional notation. MPFR_RNDZ
  // truncates toward zero instead of rounding.
  [[nodiscard]] std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;
  // d.ddde-N with `digits` significant digits.
  [[nodiscard]] std::string to_scientific(int digits) const;
  // Decimal digits that faithfully represent the precision of this value.
  [[nodiscard]] std::string to_string() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  Real& operator+=(long rhs) { mpfr_add_si(v_, v_, rhs, MPFR_RNDN); return *this; }
  Real& operator-=(long rhs) { mpfr_sub_si(v_, v_, rhs, MPFR_RNDN); return *this; }
  Real& operator*=(long rhs) { mpfr_mul_si(v_, v_, rhs, MPFR_RNDN); return *this; }
  Real& operator/=(long rhs) { mpfr_div_si(v_, v_, rhs, MPFR_RNDN); return *this; }

  friend Real operator-(const Real& x) {
    Real r(x.prec());
    mpfr_neg(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

template <class T>
concept MachineInteger = std::integral<T> && !std::same_as<T, bool>;

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

template <MachineInteger I>
Real operator+(Real a, I b) { return a += static_cast<long>(b); }
template <MachineInteger I>
Real operator+(I a, Real b) { return b += static_cast<long>(a); }
template <MachineInteger I>
Real operator-(Real a, I b) { return a -= static_cast<long>(b); }
template <MachineInteger I>
Real operator-(I a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.get(), static_cast<long>(a), b.get(), MPFR_RNDN);
  return r;
}
template <MachineInteger I>
Real operator*(Real a, I b) { return a *= static_cast<long>(b); }
template <MachineInteger I>
Real operator*(I a, Real b) { return b *= static_cast<long>(a); }
template <MachineInteger I>
Real operator/(Real a, I b) { return a /= static_cast<long>(b); }
template <MachineInteger I>
Real operator/(I a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.get(), static_cast<long>(a), b.get(), MPFR_RNDN);
  return r;
}

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
template <MachineInteger I>
bool operator==(const Real& a, I b) { return mpfr_cmp_si(a.get(), static_cast<long>(b)) == 0; }
template <MachineInteger I>
std::partial_ordering operator<=>(const Real& a, I b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.get(), static_cast<long>(b));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

// Exact scaling by a power of two.
Real ldexp(const Real& x, long e);
Real abs(const Real& x);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);
// 2^e at the given precision.
Real pow2(long e, Precision prec);

}  // namespace pell
