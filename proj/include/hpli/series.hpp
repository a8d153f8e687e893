#pragma once

#include <gmp.h>

#include <stdexcept>
#include <vector>

#include "hpli/context.hpp"
#include "hpli/real.hpp"

namespace hpli {

/// Finite Taylor expansion sum_{n<=order} c[n] * (z - center)^n with a
/// heuristic per-coefficient error bound.  Values are immutable in
/// spirit: every operation returns a fresh series.
struct TruncatedSeries {
  Real center;
  std::vector<Real> c;  // order + 1 coefficients
  std::vector<Real> e;  // per-coefficient forward error estimate

  TruncatedSeries(const Real& center_, int order, mpfr_prec_t prec)
      : center(center_),
        c(static_cast<size_t>(order) + 1, Real(prec)),
        e(static_cast<size_t>(order) + 1, Real(err_prec)) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  }

  int order() const { return static_cast<int>(c.size()) - 1; }
  mpfr_prec_t prec() const { return c.empty() ? 64 : c[0].prec(); }

  // Error bounds are heuristic; a short mantissa keeps them cheap.
  static constexpr mpfr_prec_t err_prec = 32;
};

namespace detail {

inline Real ulp_scale(const Real& x, mpfr_prec_t prec) {
  return abs(x).round_to(TruncatedSeries::err_prec) * Real::pow2(2 - static_cast<long>(prec), TruncatedSeries::err_prec);
}

}  // namespace detail

/// Pointwise sum; result order is the smaller of the two orders.
inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.center != b.center) throw std::invalid_argument("series_add: centers differ");
  int order = a.order() < b.order() ? a.order() : b.order();
  mpfr_prec_t prec = a.prec() > b.prec() ? a.prec() : b.prec();
  TruncatedSeries r(a.center, order, prec);
  for (int n = 0; n <= order; ++n) {
    r.c[n] = a.c[n] + b.c[n];
    r.e[n] = a.e[n] + b.e[n] + detail::ulp_scale(r.c[n], prec);
  }
  return r;
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, const Real& k) {
  TruncatedSeries r(a.center, a.order(), a.prec());
  Real ak = abs(k).round_to(TruncatedSeries::err_prec);
  for (int n = 0; n <= a.order(); ++n) {
    r.c[n] = a.c[n] * k;
    r.e[n] = a.e[n] * ak + detail::ulp_scale(r.c[n], a.prec());
  }
  return r;
}

/// Cauchy product truncated at the smaller order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                                  const PrecisionContext&) {
  if (a.center != b.center) throw std::invalid_argument("series_mul: centers differ");
  int order = a.order() < b.order() ? a.order() : b.order();
  mpfr_prec_t prec = a.prec() > b.prec() ? a.prec() : b.prec();
  TruncatedSeries r(a.center, order, prec);
  for (int n = 0; n <= order; ++n) {
    Real acc(prec);
    Real eacc(TruncatedSeries::err_prec);
    for (int i = 0; i <= n; ++i) {
      acc += a.c[i] * b.c[n - i];
      eacc += abs(a.c[i]).round_to(TruncatedSeries::err_prec) * b.e[n - i] +
              a.e[i] * abs(b.c[n - i]).round_to(TruncatedSeries::err_prec);
    }
    r.c[n] = acc;
    r.e[n] = eacc + (n + 1) * detail::ulp_scale(acc, prec);
  }
  return r;
}

/// Formal exponential exp(s), truncated at s.order.  Uses the standard
/// recursion E' = s' E, i.e. n E_n = sum_{j=1..n} j s_j E_{n-j}.
inline TruncatedSeries series_exp(const TruncatedSeries& s, const PrecisionContext&) {
  if (!s.c[0].is_finite()) throw std::invalid_argument("series_exp: non-finite constant term");
  mpfr_prec_t prec = s.prec();
  TruncatedSeries r(s.center, s.order(), prec);
  r.c[0] = exp(s.c[0]);
  if (!r.c[0].is_finite()) throw std::range_error("series_exp: leading exponential overflows");
  r.e[0] = abs(r.c[0]).round_to(TruncatedSeries::err_prec) * s.e[0] + detail::ulp_scale(r.c[0], prec);
  for (int n = 1; n <= s.order(); ++n) {
    Real acc(prec);
    Real eacc(TruncatedSeries::err_prec);
    for (int j = 1; j <= n; ++j) {
      acc += j * (s.c[j] * r.c[n - j]);
      eacc += static_cast<long>(j) *
              (s.e[j] * abs(r.c[n - j]).round_to(TruncatedSeries::err_prec) +
               abs(s.c[j]).round_to(TruncatedSeries::err_prec) * r.e[n - j]);
    }
    r.c[n] = acc / static_cast<long>(n);
    r.e[n] = eacc / static_cast<long>(n) + (n + 1) * detail::ulp_scale(r.c[n], prec);
  }
  return r;
}

/// Logarithmic derivative s'/s as a series of order s.order - 1.
/// Requires a nonzero constant term.
inline TruncatedSeries series_logderiv(const TruncatedSeries& s, const PrecisionContext&) {
  if (s.c[0].is_zero()) throw std::domain_error("series_logderiv: zero constant term");
  if (s.order() < 1) throw std::invalid_argument("series_logderiv: order must be >= 1");
  mpfr_prec_t prec = s.prec();
  int order = s.order() - 1;
  TruncatedSeries r(s.center, order, prec);
  Real a0 = abs(s.c[0]).round_to(TruncatedSeries::err_prec);
  for (int n = 0; n <= order; ++n) {
    Real acc = (n + 1) * s.c[n + 1];  // coefficient of s'
    Real eacc = Real(n + 1, TruncatedSeries::err_prec) * s.e[n + 1];
    for (int j = 0; j < n; ++j) {
      acc -= r.c[j] * s.c[n - j];
      eacc += abs(r.c[j]).round_to(TruncatedSeries::err_prec) * s.e[n - j] +
              r.e[j] * abs(s.c[n - j]).round_to(TruncatedSeries::err_prec);
    }
    r.c[n] = acc / s.c[0];
    r.e[n] = eacc / a0 + (n + 2) * detail::ulp_scale(r.c[n], prec);
  }
  return r;
}

/// Termwise derivative; order drops by one.
inline TruncatedSeries series_derivative(const TruncatedSeries& s) {
  if (s.order() < 1) throw std::invalid_argument("series_derivative: order must be >= 1");
  TruncatedSeries r(s.center, s.order() - 1, s.prec());
  for (int n = 0; n + 1 <= s.order(); ++n) {
    r.c[n] = (n + 1) * s.c[n + 1];
    r.e[n] = Real(n + 1, TruncatedSeries::err_prec) * s.e[n + 1];
  }
  return r;
}

/// Horner evaluation of the truncated polynomial at a point.
inline Real series_eval(const TruncatedSeries& s, const Real& x) {
  mpfr_prec_t prec = s.prec() > x.prec() ? s.prec() : x.prec();
  Real u = (x - s.center).round_to(prec);
  Real acc = s.c[s.order()].round_to(prec);
  for (int n = s.order() - 1; n >= 0; --n) acc = acc * u + s.c[n];
  return acc;
}

/// Recentering b_p = sum_{n>=p} C(n,p) a_n (z1-z0)^{n-p}, truncated at
/// s.order.  Binomials are exact integers; exact for polynomial input.
/// Convergence of the underlying full series at the new center is the
/// caller's obligation.
inline TruncatedSeries series_recenter(const TruncatedSeries& s, const Real& new_center,
                                       const PrecisionContext&) {
  if (!new_center.is_finite()) throw std::invalid_argument("series_recenter: non-finite center");
  mpfr_prec_t prec = s.prec();
  Real h = (new_center - s.center).round_to(prec);
  int K = s.order();
  TruncatedSeries r(new_center, K, prec);
  if (h.is_zero()) {
    r.c = s.c;
    r.e = s.e;
    r.center = new_center;
    return r;
  }
  Real habs = abs(h).round_to(TruncatedSeries::err_prec);
  mpz_t bin;
  mpz_init(bin);
  for (int p = 0; p <= K; ++p) {
    // C(n,p) built incrementally: C(n,p) = C(n-1,p) * n / (n-p).
    mpz_set_ui(bin, 1);
    Real hp(1L, prec);
    Real hpabs(1L, TruncatedSeries::err_prec);
    Real acc(prec);
    Real eacc(TruncatedSeries::err_prec);
    for (int n = p; n <= K; ++n) {
      if (n > p) {
        mpz_mul_ui(bin, bin, static_cast<unsigned long>(n));
        mpz_divexact_ui(bin, bin, static_cast<unsigned long>(n - p));
        hp *= h;
        hpabs *= habs;
      }
      Real term(prec);
      mpfr_mul_z(term.raw(), s.c[n].raw(), bin, MPFR_RNDN);
      acc += term * hp;
      Real binabs(TruncatedSeries::err_prec);
      mpfr_set_z(binabs.raw(), bin, MPFR_RNDN);
      eacc += binabs * s.e[n] * hpabs;
    }
    r.c[p] = acc;
    r.e[p] = eacc + (K - p + 1) * detail::ulp_scale(acc, prec);
  }
  mpz_clear(bin);
  return r;
}

/// Composition phi(z) = outer(1/(1-z)) as a series at z0, where outer
/// is centered at s0 = 1/(1-z0).  The inner map expands as
/// 1/(1-z) = s0 + sum_{j>=1} t^{j+1} u^j with t = 1/(1-z0), u = z-z0.
inline TruncatedSeries series_compose_moebius(const TruncatedSeries& outer, const Real& z0,
                                              const PrecisionContext& ctx) {
  if (!(z0 < 1L)) throw std::domain_error("series_compose_moebius: z0 must be < 1 (singularity at z=1)");
  mpfr_prec_t prec = outer.prec();
  Real t = 1L / (Real(1L, prec) - z0.round_to(prec));
  {
    Real s0_expected = t;
    Real gap = abs(outer.center - s0_expected);
    Real tol = abs(s0_expected) * Real::pow2(-static_cast<long>(prec) / 2, prec) +
               Real::pow2(-static_cast<long>(prec) / 2, prec);
    if (gap > tol)
      throw std::invalid_argument("series_compose_moebius: outer series not centered at 1/(1-z0)");
  }
  int K = outer.order();
  Real z0p = z0.round_to(prec);
  // v(u) = inner - s0, coefficients t^{j+1} for j >= 1, zero constant term.
  TruncatedSeries v(z0p, K, prec);
  Real tp = t;
  for (int j = 1; j <= K; ++j) {
    tp *= t;
    v.c[j] = tp;
    v.e[j] = detail::ulp_scale(tp, prec) * (j + 1);
  }
  // Horner in v.
  TruncatedSeries acc(z0p, K, prec);
  acc.c[0] = outer.c[K];
  acc.e[0] = outer.e[K];
  for (int n = K - 1; n >= 0; --n) {
    acc = series_mul(acc, v, ctx);
    acc.c[0] += outer.c[n];
    acc.e[0] += outer.e[n];
  }
  return acc;
}

}  // namespace hpli
