#pragma once

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace hpli {

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value carries its own mantissa precision in bits.  Binary
/// operations round once, to the larger of the two operand precisions,
/// in round-to-nearest mode; results are therefore reproducible
/// bit-for-bit for a fixed sequence of operations.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  Real(long x, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}

  Real(double x, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }

  Real(const std::string& s, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("Real: unparsable decimal literal: " + s);
    }
  }

  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  /// Copy rounded to a different precision.
  Real round_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal string with the given number of significant digits
  /// (scientific notation, round-to-nearest).
  std::string str(int digits) const {
    if (digits < 2) digits = 2;
    int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::string out(static_cast<size_t>(n), '\0');
    mpfr_snprintf(out.data(), static_cast<size_t>(n) + 1, "%.*Re", digits - 1, v_);
    return out;
  }

  // -- constants ------------------------------------------------------

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  static Real euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }

  static Real ln2(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e as an exact Real (for tolerances like 2^-bits).
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  // -- arithmetic -----------------------------------------------------

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define HPLI_REAL_BINOP(op, fn)                          \
  friend Real operator op(const Real& a, const Real& b) { \
    Real r(a.prec() > b.prec() ? a.prec() : b.prec());    \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                      \
    return r;                                             \
  }                                                       \
  friend Real operator op(const Real& a, long b) {        \
    Real r(a.prec());                                     \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                    \
    return r;                                             \
  }                                                       \
  friend Real operator op(const Real& a, int b) { return a op static_cast<long>(b); }

  HPLI_REAL_BINOP(+, mpfr_add)
  HPLI_REAL_BINOP(-, mpfr_sub)
  HPLI_REAL_BINOP(*, mpfr_mul)
  HPLI_REAL_BINOP(/, mpfr_div)
#undef HPLI_REAL_BINOP

  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }
  friend Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }
  friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
  friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

  Real& operator+=(const Real& o) {
    bump_prec(o.prec());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    bump_prec(o.prec());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    bump_prec(o.prec());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    bump_prec(o.prec());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  // -- comparisons ----------------------------------------------------

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  static void check_prec(mpfr_prec_t prec) {
    if (prec < 2) throw std::invalid_argument("Real: precision must be >= 2 bits");
  }
  void bump_prec(mpfr_prec_t p) {
    if (prec() < p) {
      mpfr_t t;
      mpfr_init2(t, p);
      mpfr_set(t, v_, MPFR_RNDN);
      mpfr_swap(v_, t);
      mpfr_clear(t);
    }
  }

  mpfr_t v_;
};

// -- elementary functions (result keeps the argument's precision) ------

#define HPLI_REAL_FUN1(name, fn)      \
  inline Real name(const Real& a) {   \
    Real r(a.prec());                 \
    fn(r.raw(), a.raw(), MPFR_RNDN);  \
    return r;                         \
  }

HPLI_REAL_FUN1(abs, mpfr_abs)
HPLI_REAL_FUN1(sqrt, mpfr_sqrt)
HPLI_REAL_FUN1(exp, mpfr_exp)
HPLI_REAL_FUN1(log, mpfr_log)
HPLI_REAL_FUN1(log1p, mpfr_log1p)
HPLI_REAL_FUN1(sin, mpfr_sin)
HPLI_REAL_FUN1(cos, mpfr_cos)
HPLI_REAL_FUN1(gamma, mpfr_gamma)
HPLI_REAL_FUN1(lngamma, mpfr_lngamma)
HPLI_REAL_FUN1(digamma, mpfr_digamma)
#undef HPLI_REAL_FUN1

inline Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
  return r;
}

inline Real ceil(const Real& a) {
  Real r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}

inline Real pow(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

inline Real pow(const Real& a, const Real& b) {
  Real r(a.prec() > b.prec() ? a.prec() : b.prec());
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

/// Riemann zeta at an unsigned integer argument (used for Bernoulli
/// numbers and fixed coefficient feeds; the series engine has its own
/// evaluator for general arguments).
inline Real zeta_ui(unsigned long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(20); }

}  // namespace hpli
