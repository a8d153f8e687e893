#pragma once

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hpli/context.hpp"
#include "hpli/real.hpp"
#include "hpli/series.hpp"

namespace hpli {

namespace detail {

/// B_{2r} / (2r)! = (-1)^{r+1} 2 zeta(2r) / (2pi)^{2r}, cached per
/// precision tier.  These feed every Euler-Maclaurin correction sum.
inline Real bernoulli_over_fact(int r, mpfr_prec_t prec) {
  struct Cache {
    std::mutex mu;
    mpfr_prec_t prec = 0;
    std::vector<Real> vals;  // index r-1
  };
  static Cache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.prec < prec) {
    cache.vals.clear();
    cache.prec = prec;
  }
  while (static_cast<int>(cache.vals.size()) < r) {
    int rr = static_cast<int>(cache.vals.size()) + 1;
    Real z = zeta_ui(static_cast<unsigned long>(2 * rr), cache.prec);
    Real twopi = 2L * Real::pi(cache.prec);
    Real val = 2L * z / pow(twopi, 2L * rr);
    if (rr % 2 == 0) val = -val;
    cache.vals.push_back(val);
  }
  return cache.vals[static_cast<size_t>(r) - 1].round_to(prec);
}

inline Real max_abs_coeff(const TruncatedSeries& s) {
  Real m(TruncatedSeries::err_prec);
  for (const Real& x : s.c) m = max(m, abs(x).round_to(TruncatedSeries::err_prec));
  return m;
}

}  // namespace detail

/// Taylor series of zeta(s0 + eps) in eps, truncated at `order`, by the
/// Euler-Maclaurin formula applied with a series-valued argument:
///
///   zeta(s) = sum_{j<N} j^-s + N^-s/2 + N^{1-s}/(s-1)
///           + sum_{r<=M} B_{2r}/(2r)! (s)_{2r-1} N^{-s-2r+1} + R_M
///
/// With subtract_pole (s0 must be exactly 1) the returned series is
/// zeta(1+eps) - 1/eps; its coefficients are (-1)^k gamma_k / k! in the
/// Stieltjes constants.  The correction sum is accumulated until terms
/// fall below the rounding floor; if they start diverging first, the
/// cutoff N is doubled and the evaluation restarts.
inline TruncatedSeries zeta_series(const Real& s0, int order, mpfr_prec_t prec,
                                   bool subtract_pole = false) {
  if (subtract_pole) {
    if (!(s0 == 1L)) throw std::invalid_argument("zeta_series: subtract_pole requires s0 == 1");
  } else if (s0 == 1L) {
    throw std::domain_error("zeta_series: pole at s = 1");
  }
  if (!s0.is_finite()) throw std::invalid_argument("zeta_series: non-finite argument");
  const int K = order;
  const mpfr_prec_t P = prec;
  const Real thresh = Real::pow2(-static_cast<long>(P) - 8, TruncatedSeries::err_prec);

  long N = std::max<long>(48, static_cast<long>(0.19 * static_cast<double>(P)) + 2L * K + 16);
  // Keep N^{-s0} from dwarfing everything for very negative s0 (the
  // reflection path keeps s0 >= 0 in practice, but stay safe).
  for (int attempt = 0;; ++attempt) {
    if (attempt > 6) throw std::runtime_error("zeta_series: correction sum failed to converge");
    const Real s0p = s0.round_to(P);

    // A = sum_{j=1}^{N-1} j^{-s0} exp(-eps ln j)
    TruncatedSeries A(s0p, K, P);
    A.c[0] = Real(1L, P);  // j = 1
    for (long j = 2; j < N; ++j) {
      Real lj = log(Real(j, P));
      Real t = exp(Real(-1L, P) * s0p * lj);  // j^{-s0}
      A.c[0] += t;
      for (int k = 1; k <= K; ++k) {
        t = t * lj / (-k);
        A.c[k] += t;
      }
    }

    Real lnN = log(Real(N, P));
    Real NmS0 = exp(Real(-1L, P) * s0p * lnN);  // N^{-s0}

    // Bracket = N^{-s0}/2 + N^{1-s0} geom(1/(s-1)) + corrections; the
    // shared factor exp(-eps lnN) is multiplied on at the end.
    TruncatedSeries bracket(s0p, K, P);
    bracket.c[0] = NmS0 / 2L;

    if (!subtract_pole) {
      // N^{1-s0} * 1/(s0 - 1 + eps) as a geometric series.
      Real N1mS0 = NmS0 * Real(N, P);
      Real g = 1L / (s0p - 1L);
      for (int k = 0; k <= K; ++k) {
        bracket.c[k] += N1mS0 * g;
        g = g / (1L - s0p);
      }
    }

    // Correction terms: RF_r(eps) = (s)_{2r-1} built incrementally.
    TruncatedSeries rf(s0p, K, P);
    rf.c[0] = s0p;
    if (K >= 1) rf.c[1] = Real(1L, P);
    Real qr = NmS0 * Real(N, P);  // N^{-s0-2r+1} sequence, here r=0 state
    Real Nsq = Real(N, P) * Real(N, P);
    Real prev_mag(TruncatedSeries::err_prec);
    int grow_streak = 0;
    bool converged = false;
    Real err_mag(TruncatedSeries::err_prec);
    auto mul_linear = [&](const TruncatedSeries& f, const Real& a) {
      // f * (a + eps)
      TruncatedSeries g2(f.center, f.order(), P);
      for (int k = f.order(); k >= 0; --k) {
        g2.c[k] = f.c[k] * a;
        if (k > 0) g2.c[k] += f.c[k - 1];
      }
      return g2;
    };
    for (int r = 1;; ++r) {
      if (r > 1) {
        rf = mul_linear(rf, s0p + (2L * r - 3L));
        rf = mul_linear(rf, s0p + (2L * r - 2L));
      }
      qr = qr / Nsq;
      Real coef = detail::bernoulli_over_fact(r, P) * qr;
      Real mag = abs(coef).round_to(TruncatedSeries::err_prec) * detail::max_abs_coeff(rf);
      for (int k = 0; k <= K; ++k) bracket.c[k] += coef * rf.c[k];
      if (mag < thresh) {
        converged = true;
        err_mag = mag;
        break;
      }
      if (r > 4 && mag > prev_mag) {
        if (++grow_streak >= 2) break;  // diverging: enlarge N
      } else {
        grow_streak = 0;
      }
      prev_mag = mag;
      if (r > 40000) break;
    }
    if (!converged) {
      N *= 2;
      continue;
    }

    // exp(-eps lnN) factor.
    TruncatedSeries ef(s0p, K, P);
    Real t(1L, P);
    ef.c[0] = t;
    for (int k = 1; k <= K; ++k) {
      t = t * lnN / (-k);
      ef.c[k] = t;
    }
    PrecisionContext dummy(64, 2);
    TruncatedSeries tail = series_mul(bracket, ef, dummy);

    TruncatedSeries out(s0p, K, P);
    for (int k = 0; k <= K; ++k) out.c[k] = A.c[k] + tail.c[k];

    if (subtract_pole) {
      // (exp(-eps lnN) - 1)/eps, coefficients (-lnN)^{k+1} / (k+1)!.
      Real u = -lnN;
      for (int k = 0; k <= K; ++k) {
        out.c[k] += u;
        u = u * lnN / (-(k + 2));
      }
    }

    Real lump = Real(static_cast<long>(N + 4 * K + 64), TruncatedSeries::err_prec);
    for (int k = 0; k <= K; ++k) {
      out.e[k] = err_mag + lump * detail::ulp_scale(out.c[k], P) +
                 detail::ulp_scale(detail::max_abs_coeff(A), P);
    }
    return out;
  }
}

/// Hurwitz zeta values zeta(m, a) for integer m = 2..m_max at real a > 0,
/// all sharing one Euler-Maclaurin pass.  Feeds polygamma coefficients:
/// psi^{(k)}(a)/k! = (-1)^{k+1} zeta(k+1, a).
inline std::vector<Real> hurwitz_zeta_batch(int m_max, const Real& a, mpfr_prec_t prec) {
  if (!(a > 0L)) throw std::domain_error("hurwitz_zeta_batch: requires a > 0");
  if (m_max < 2) return {};
  const mpfr_prec_t P = prec;
  const Real thresh = Real::pow2(-static_cast<long>(P) - 8, TruncatedSeries::err_prec);
  long N = std::max<long>(32, static_cast<long>(0.19 * static_cast<double>(P)) + m_max / 4 + 16);

  for (int attempt = 0;; ++attempt) {
    if (attempt > 6) throw std::runtime_error("hurwitz_zeta_batch: failed to converge");
    Real ap = a.round_to(P);
    std::vector<Real> out(static_cast<size_t>(m_max) - 1, Real(P));
    // sum_{i<N} (a+i)^{-m}
    for (long i = 0; i < N; ++i) {
      Real u = 1L / (ap + i);
      Real t = u * u;
      for (int m = 2; m <= m_max; ++m) {
        out[static_cast<size_t>(m) - 2] += t;
        t *= u;
      }
    }
    Real x = ap + N;
    Real invx = 1L / x;
    bool all_ok = true;
    for (int m = 2; m <= m_max; ++m) {
      Real& acc = out[static_cast<size_t>(m) - 2];
      Real xm = pow(invx, static_cast<long>(m));  // x^{-m}
      acc += xm * x / (m - 1L);                   // x^{1-m}/(m-1)
      acc += xm / 2L;
      // corrections: B_{2r}/(2r)! (m)_{2r-1} x^{-m-2r+1}
      Real q = xm * x;  // x^{-m+1}; divide by x^2 each r
      Real prev_mag(TruncatedSeries::err_prec);
      int grow = 0;
      bool conv = false;
      // (m)_{2r-1} = m (m+1) ... (m+2r-2)
      Real rf(1L, P);
      for (int r = 1; r <= 40000; ++r) {
        if (r == 1) {
          rf = Real(m, P);
        } else {
          rf = rf * (Real(m, P) + (2L * r - 3L)) * (Real(m, P) + (2L * r - 2L));
        }
        q = q / (x * x);
        Real term = detail::bernoulli_over_fact(r, P) * rf * q;
        acc += term;
        Real mag = abs(term).round_to(TruncatedSeries::err_prec);
        if (mag < thresh * max(Real(1L, TruncatedSeries::err_prec),
                               abs(acc).round_to(TruncatedSeries::err_prec))) {
          conv = true;
          break;
        }
        if (r > 4 && mag > prev_mag) {
          if (++grow >= 2) break;
        } else {
          grow = 0;
        }
        prev_mag = mag;
      }
      if (!conv) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return out;
    N *= 2;
  }
}

/// zeta(s) and zeta'(s) for real s != 1.  Euler-Maclaurin for s >= 0;
/// the functional equation zeta(s) = chi(s) zeta(1-s) for s < 0.
inline std::pair<Real, Real> zeta_em(const Real& s, const PrecisionContext& ctx) {
  if (s == 1L) throw std::domain_error("zeta_em: pole at s = 1");
  const mpfr_prec_t P = ctx.bits + 32;
  if (s >= 0L) {
    TruncatedSeries z = zeta_series(s.round_to(P), 1, P);
    return {z.c[0].round_to(ctx.bits), z.c[1].round_to(ctx.bits)};
  }
  // chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s)
  Real sp = s.round_to(P);
  Real pi = Real::pi(P);
  Real one_minus_s = 1L - sp;
  TruncatedSeries zr = zeta_series(one_minus_s, 1, P);
  Real g = gamma(one_minus_s);
  Real psi1ms = digamma(one_minus_s);
  Real base = exp(sp * Real::ln2(P)) * exp((sp - 1L) * log(pi)) * g;
  Real sn = sin(pi * sp / 2L);
  Real cn = cos(pi * sp / 2L);
  Real chi = base * sn;
  Real chi_prime = base * ((Real::ln2(P) + log(pi) - psi1ms) * sn + pi / 2L * cn);
  Real zeta_s = chi * zr.c[0];
  Real zeta_prime_s = chi_prime * zr.c[0] - chi * zr.c[1];
  return {zeta_s.round_to(ctx.bits), zeta_prime_s.round_to(ctx.bits)};
}

}  // namespace hpli
