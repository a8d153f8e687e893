#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hpli/context.hpp"
#include "hpli/real.hpp"
#include "hpli/series.hpp"
#include "hpli/zeta.hpp"

namespace hpli {

/// xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s), normalized so xi(0) = 1,
/// together with its logarithm and logarithmic derivative ell = xi'/xi.
struct XiValue {
  Real s;
  Real xi;
  Real log_xi;
  Real ell;
};

struct GammaDigamma {
  Real gamma_val;
  Real log_gamma;
  Real psi;
};

/// Gamma, log Gamma and digamma on the positive real axis.
inline GammaDigamma gamma_digamma(const Real& s, const PrecisionContext& ctx) {
  if (!(s > 0L)) throw std::domain_error("gamma_digamma: requires s > 0");
  mpfr_prec_t P = ctx.bits + 32;
  Real sp = s.round_to(P);
  return {gamma(sp).round_to(ctx.bits), lngamma(sp).round_to(ctx.bits),
          digamma(sp).round_to(ctx.bits)};
}

/// Taylor series of digamma at z0 > 0: the k-th coefficient is
/// psi^{(k)}(z0)/k! = (-1)^{k+1} zeta(k+1, z0) for k >= 1.
inline TruncatedSeries psi_series_at(const Real& z0, int order, mpfr_prec_t prec) {
  if (!(z0 > 0L)) throw std::domain_error("psi_series_at: requires z0 > 0");
  TruncatedSeries s(z0.round_to(prec), order, prec);
  s.c[0] = digamma(z0.round_to(prec));
  if (order >= 1) {
    auto hur = hurwitz_zeta_batch(order + 1, z0, prec);
    for (int k = 1; k <= order; ++k) {
      s.c[k] = (k % 2 == 1) ? hur[static_cast<size_t>(k) - 1] : -hur[static_cast<size_t>(k) - 1];
    }
  }
  for (int k = 0; k <= order; ++k) s.e[k] = detail::ulp_scale(s.c[k], prec) * 8L;
  return s;
}

namespace detail {

// w(s) = (s-1) zeta(s), entire and positive on (-2, inf).  Returns its
// Taylor series at s0 to the given order.  Near s0 = 1 the series is
// derived from the pole-subtracted expansion at 1 (no large-coefficient
// cancellation); elsewhere it is the product (s-1) * zeta-series.
inline TruncatedSeries w_series_at(const Real& s0, int order, mpfr_prec_t prec) {
  Real gap = abs(s0 - Real(1L, s0.prec()));
  if (gap <= Real(0.5, 64)) {
    int pad = 48;
    TruncatedSeries z1 = zeta_series(Real(1L, prec), order + pad, prec, /*subtract_pole=*/true);
    PrecisionContext dummy(64, 2);
    TruncatedSeries z = (gap.is_zero()) ? z1 : series_recenter(z1, s0.round_to(prec), dummy);
    TruncatedSeries w(s0.round_to(prec), order, prec);
    Real a = s0.round_to(prec) - 1L;  // w = (a + eps) z + 1
    for (int k = order; k >= 0; --k) {
      w.c[k] = z.c[k] * a;
      if (k > 0) w.c[k] += z.c[k - 1];
      w.e[k] = z.e[k] * abs(a).round_to(TruncatedSeries::err_prec) +
               (k > 0 ? z.e[k - 1] : Real(TruncatedSeries::err_prec)) +
               ulp_scale(w.c[k], prec);
    }
    w.c[0] = w.c[0] + 1L;
    return w;
  }
  TruncatedSeries z = zeta_series(s0.round_to(prec), order + 1, prec);
  TruncatedSeries w(s0.round_to(prec), order, prec);
  Real a = s0.round_to(prec) - 1L;
  for (int k = order; k >= 0; --k) {
    w.c[k] = z.c[k] * a;
    if (k > 0) w.c[k] += z.c[k - 1];
    w.e[k] = z.e[k] * abs(a).round_to(TruncatedSeries::err_prec) +
             (k > 0 ? z.e[k - 1] : Real(TruncatedSeries::err_prec)) + ulp_scale(w.c[k], prec);
  }
  return w;
}

inline double ell_radius(double s0) {
  double dx = s0 - 0.5;
  return std::sqrt(dx * dx + 14.134725141734693 * 14.134725141734693);
}

}  // namespace detail

/// Taylor series of ell(s) = xi'(s)/xi(s) at a real center s0 > -2,
/// assembled from the pole-free decomposition
///
///   ell(s) = (1/2) psi(s/2 + 1) - (1/2) log pi + w'(s)/w(s),
///
/// with w(s) = (s-1) zeta(s).  The three pieces have radius |s0 + 2|
/// while the sum has radius |rho_1 - s0|; the working precision is
/// escalated to absorb that cancellation, so the returned coefficients
/// are accurate to ~2^-prec_target relative even at high order.
inline TruncatedSeries ell_series_at(const Real& s0, int order, mpfr_prec_t prec_target) {
  if (!s0.is_finite()) throw std::invalid_argument("ell_series_at: non-finite center");
  if (!(s0 > -2L)) throw std::domain_error("ell_series_at: center must exceed -2");
  double s0d = s0.to_double();
  double lg_radius = std::log2(detail::ell_radius(s0d));
  double extra = 0.0;
  double gap = std::abs(s0d - 1.0);
  if (gap > 0.5 && gap < 1.0) extra = -std::log2(gap);  // product-form cancellation
  mpfr_prec_t P = prec_target +
                  static_cast<mpfr_prec_t>(std::ceil((order + 1) * (lg_radius + extra))) + 64;

  TruncatedSeries w = detail::w_series_at(s0.round_to(P), order + 1, P);
  PrecisionContext dummy(64, 2);
  TruncatedSeries ld = series_logderiv(w, dummy);  // order `order`

  Real z0 = s0.round_to(P) / 2L + 1L;
  TruncatedSeries psis = psi_series_at(z0, order, P);

  TruncatedSeries out(s0.round_to(prec_target), order, prec_target);
  Real half(0.5, P);
  Real hp = half;  // (1/2)^{k+1}
  Real lnpi_half = log(Real::pi(P)) / 2L;
  for (int k = 0; k <= order; ++k) {
    Real v = ld.c[k] + hp * psis.c[k];
    if (k == 0) v -= lnpi_half;
    out.c[k] = v.round_to(prec_target);
    out.e[k] = ld.e[k] + detail::ulp_scale(out.c[k], prec_target) * 4L;
    hp = hp / 2L;
  }
  return out;
}

/// Point evaluation of xi, log xi and ell.  Direct formula on
/// s >= -1/2 (pole-subtracted w-series inside |s-1| < 1/8), reflected
/// closed form for s < -1/2 where Gamma(s/2) poles meet trivial zeros.
inline XiValue xi_eval(const Real& s, const PrecisionContext& ctx) {
  mpfr_prec_t P = ctx.bits + 64;
  Real sp = s.round_to(P);
  if (!sp.is_finite()) throw std::invalid_argument("xi_eval: non-finite argument");

  if (sp < Real(-0.5, 64)) {
    // xi(s) = 2(1-s) 2^s pi^{s/2} Gamma(1-s) zeta(1-s) / Gamma(-s/2)
    Real one_minus_s = 1L - sp;
    PrecisionContext up(P, ctx.series_order, ctx.rel_tol, ctx.quad_points);
    auto [z, zp] = zeta_em(one_minus_s, up);
    Real lnpi = log(Real::pi(P));
    Real log_xi = Real::ln2(P) + log(one_minus_s) + sp * Real::ln2(P) + sp / 2L * lnpi +
                  lngamma(one_minus_s) - lngamma(-sp / 2L) + log(z);
    Real xi = exp(log_xi);
    Real ell = 1L / (sp - 1L) + Real::ln2(P) + lnpi / 2L - digamma(one_minus_s) +
               digamma(-sp / 2L) / 2L - zp / z;
    return {s.round_to(ctx.bits), xi.round_to(ctx.bits), log_xi.round_to(ctx.bits),
            ell.round_to(ctx.bits)};
  }

  Real w(P), wp(P);  // w = (s-1) zeta(s) and its derivative
  Real gap = abs(sp - 1L);
  if (gap < Real(0.125, 64)) {
    int ord = static_cast<int>((P + 16) / 3) + 8;
    TruncatedSeries z1 = zeta_series(Real(1L, P), ord, P, /*subtract_pole=*/true);
    Real h = sp - 1L;
    // w(1+h) = 1 + h z(1+h);  w'(1+h) = z(1+h) + h z'(1+h)
    Real zv = series_eval(z1, sp);
    Real zd = series_eval(series_derivative(z1), sp);
    w = 1L + h * zv;
    wp = zv + h * zd;
  } else {
    PrecisionContext up(P, ctx.series_order, ctx.rel_tol, ctx.quad_points);
    auto [z, zp] = zeta_em(sp, up);
    w = (sp - 1L) * z;
    wp = z + (sp - 1L) * zp;
  }

  Real half_s1 = sp / 2L + 1L;
  Real lnpi = log(Real::pi(P));
  Real log_xi = Real::ln2(P) + lngamma(half_s1) - sp / 2L * lnpi + log(w);
  Real xi = exp(log_xi);
  Real ell = digamma(half_s1) / 2L - lnpi / 2L + wp / w;
  return {s.round_to(ctx.bits), xi.round_to(ctx.bits), log_xi.round_to(ctx.bits),
          ell.round_to(ctx.bits)};
}

/// Cached Taylor series of ell at 0 (the foundation of the local route
/// and of F).  Orders are quantized upward to multiples of 32 so scans
/// at many tau values share one entry; keys are exact (bits, order).
inline const TruncatedSeries& ell_base_series(mpfr_prec_t bits, int min_order) {
  struct Cache {
    std::mutex mu;
    std::map<std::pair<long, int>, TruncatedSeries> entries;
  };
  static Cache cache;
  int order = ((min_order + 31) / 32) * 32;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto key = std::make_pair(static_cast<long>(bits), order);
  auto it = cache.entries.find(key);
  if (it == cache.entries.end()) {
    TruncatedSeries s = ell_series_at(Real(0L, bits), order, bits + 64);
    it = cache.entries.emplace(key, std::move(s)).first;
  }
  return it->second;
}

}  // namespace hpli
