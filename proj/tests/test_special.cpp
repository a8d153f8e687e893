#include <catch2/catch_amalgamated.hpp>

#include "hpli/special.hpp"
#include "hpli/zeta.hpp"
#include "test_util.hpp"

using namespace hpli;
using namespace hpli::test;

TEST_CASE("zeta_em at known points", "[zeta]") {
  auto ctx = default_ctx();
  SECTION("zeta(2) = pi^2/6") {
    auto [z, zp] = zeta_em(Real(2L, 256), ctx);
    Real ref = Real::pi(256) * Real::pi(256) / 6L;
    REQUIRE(close_rel(z, ref, 1e-70));
  }
  SECTION("zeta(0) = -1/2") {
    auto [z, zp] = zeta_em(Real(0L, 256), ctx);
    REQUIRE(close_rel(z, Real(-0.5, 256), 1e-70));
  }
  SECTION("pole rejected") {
    REQUIRE_THROWS_AS(zeta_em(Real(1L, 256), ctx), std::domain_error);
  }
}

TEST_CASE("zeta_em agrees with its own doubled-precision run", "[zeta][oracle]") {
  // Doubling the precision drives the Euler-Maclaurin cutoffs N and M
  // up independently; agreement pins the truncation control.
  for (double sd : {0.5, 0.25, 2.0, 5.0, -1.5, -3.25}) {
    PrecisionContext lo(256, 8);
    PrecisionContext hi(512, 8);
    Real s_lo(sd, 256), s_hi(sd, 512);
    auto [zl, zpl] = zeta_em(s_lo, lo);
    auto [zh, zph] = zeta_em(s_hi, hi);
    REQUIRE(close_rel(zl, zh, 1e-74));  // < 2^-248 = 2^-(bits-8)
    REQUIRE(close_rel(zpl, zph, 1e-74));
  }
}

TEST_CASE("zeta_em matches the independent MPFR evaluator", "[zeta][oracle]") {
  auto ctx = default_ctx();
  for (double sd : {0.5, 3.0, 7.5, -0.5, -2.5}) {
    auto [z, zp] = zeta_em(Real(sd, 256), ctx);
    Real ref(256);
    Real s(sd, 256);
    mpfr_zeta(ref.raw(), s.raw(), MPFR_RNDN);
    REQUIRE(close_rel(z, ref, 1e-70));
  }
}

TEST_CASE("zeta series derivative coefficients via doubling", "[zeta][oracle]") {
  auto lo = zeta_series(Real(2L, 320), 10, 320);
  auto hi = zeta_series(Real(2L, 640), 10, 640);
  for (int k = 0; k <= 10; ++k) {
    REQUIRE(close_rel(lo.c[k], hi.c[k], 1e-90));
    REQUIRE(abs(lo.c[k] - hi.c[k]) <= lo.e[k] + hi.e[k] + Real(1e-90, 64));
  }
}

TEST_CASE("hurwitz zeta batch at checkable points", "[zeta]") {
  SECTION("zeta(m, 1) = zeta(m)") {
    auto h = hurwitz_zeta_batch(6, Real(1L, 256), 256);
    for (int m = 2; m <= 6; ++m) {
      REQUIRE(close_rel(h[static_cast<size_t>(m) - 2], zeta_ui(static_cast<unsigned>(m), 256), 1e-70));
    }
  }
  SECTION("zeta(2, 1/2) = pi^2/2") {
    auto h = hurwitz_zeta_batch(2, Real(0.5, 256), 256);
    Real ref = Real::pi(256) * Real::pi(256) / 2L;
    REQUIRE(close_rel(h[0], ref, 1e-70));
  }
  SECTION("domain") {
    REQUIRE_THROWS_AS(hurwitz_zeta_batch(3, Real(-1L, 256), 256), std::domain_error);
  }
}

TEST_CASE("gamma_digamma known identities", "[special]") {
  auto ctx = default_ctx();
  SECTION("psi(1) = -euler") {
    auto g = gamma_digamma(Real(1L, 256), ctx);
    REQUIRE(close_rel(g.psi, -Real::euler_gamma(256), 1e-70));
  }
  SECTION("Gamma(1/2) = sqrt(pi)") {
    auto g = gamma_digamma(Real(0.5, 256), ctx);
    REQUIRE(close_rel(g.gamma_val, sqrt(Real::pi(256)), 1e-70));
  }
  SECTION("Gamma(1/4) Gamma(3/4) = pi sqrt(2)") {
    auto a = gamma_digamma(Real(0.25, 256), ctx);
    auto b = gamma_digamma(Real(0.75, 256), ctx);
    Real ref = Real::pi(256) * sqrt(Real(2L, 256));
    REQUIRE(close_rel(a.gamma_val * b.gamma_val, ref, 1e-70));
    REQUIRE(close_abs(a.gamma_val, Real("3.6256099", 256), 1e-7));
  }
  SECTION("log_gamma consistent with gamma") {
    auto g = gamma_digamma(Real("2.75", 256), ctx);
    REQUIRE(close_rel(log(g.gamma_val), g.log_gamma, 1e-70));
  }
  SECTION("nonpositive arguments rejected") {
    REQUIRE_THROWS_AS(gamma_digamma(Real(0L, 256), ctx), std::domain_error);
    REQUIRE_THROWS_AS(gamma_digamma(Real(-2L, 256), ctx), std::domain_error);
  }
}

TEST_CASE("xi_eval paper anchors", "[special]") {
  auto ctx = default_ctx();
  SECTION("xi(0) = 1 and xi(1) = 1") {
    REQUIRE(close_rel(xi_eval(Real(0L, 256), ctx).xi, Real(1L, 256), 1e-70));
    REQUIRE(close_rel(xi_eval(Real(1L, 256), ctx).xi, Real(1L, 256), 1e-70));
  }
  SECTION("xi(1/2) matches the closed form -(1/4) pi^(-1/4) Gamma(1/4) zeta(1/2)") {
    auto x = xi_eval(Real(0.5, 256), ctx);
    Real pi = Real::pi(320);
    Real g = gamma(Real(0.25, 320));
    auto [z, zp] = zeta_em(Real(0.5, 320), PrecisionContext(320, 8));
    Real ref = Real(-0.25, 320) * exp(log(pi) / -4L) * g * z;
    REQUIRE(close_rel(x.xi, ref, 1e-70));
    REQUIRE(close_abs(x.xi, Real("0.994242", 256), 5e-6));  // paper's quoted value
  }
  SECTION("ell(1/2) = 0") {
    auto x = xi_eval(Real(0.5, 256), ctx);
    REQUIRE(abs(x.ell) < Real(1e-70, 64));
  }
  SECTION("ell(1) = log(2 sqrt(pi)) - 1 - euler/2, negated") {
    auto x = xi_eval(Real(1L, 256), ctx);
    Real ell0 = log(2L * sqrt(Real::pi(256))) - 1L - Real::euler_gamma(256) / 2L;
    REQUIRE(close_rel(x.ell, -ell0, 1e-70));
    REQUIRE(close_abs(x.ell, Real("0.0230957", 256), 1e-7));
  }
  SECTION("log_xi = log(xi)") {
    for (double sd : {0.5, 2.0, -3.0}) {
      auto x = xi_eval(Real(sd, 256), ctx);
      REQUIRE(close_rel(x.log_xi, log(x.xi), 1e-70));
      REQUIRE(x.xi > 0L);
    }
  }
}

TEST_CASE("xi functional equation and ell antisymmetry", "[special][property]") {
  PrecisionContext ctx(256, 64);
  for (const char* sd : {"-2", "-0.3", "0.1", "0.5", "0.9", "1.7", "3"}) {
    Real s(sd, 256);
    auto a = xi_eval(s, ctx);
    auto b = xi_eval(1L - s, ctx);
    REQUIRE(abs(a.xi - b.xi) / a.xi < Real(1e-30, 64));
    REQUIRE(abs(a.ell + b.ell) <= abs(a.ell) * Real(1e-30, 64) + Real(1e-40, 64));
  }
}

TEST_CASE("ell is strictly increasing on (0.5, 3)", "[special][property]") {
  auto ctx = default_ctx();
  Real prev(256);
  bool first = true;
  for (const char* sd : {"0.55", "0.8", "1.1", "1.5", "1.9", "2.3", "2.7", "2.95"}) {
    auto x = xi_eval(Real(sd, 256), ctx);
    if (!first) REQUIRE(x.ell > prev);
    prev = x.ell;
    first = false;
  }
}

TEST_CASE("xi_eval near the zeta pole is smooth", "[special]") {
  auto ctx = default_ctx();
  // straddle the |s-1| < 1/8 switchover
  auto inside = xi_eval(Real(1L, 256) + Real::pow2(-5, 256), ctx);
  auto outside = xi_eval(Real(1L, 256) + Real(0.2, 256), ctx);
  REQUIRE(inside.xi > 0L);
  REQUIRE(outside.xi > 0L);
  REQUIRE(inside.ell < outside.ell);
  // derivative of the branch value agrees across the seam: compare
  // ell at 1±1/8 by antisymmetry
  auto p = xi_eval(Real("1.125", 256), ctx);
  auto m = xi_eval(Real("-0.125", 256), ctx);
  REQUIRE(close_rel(p.ell, -m.ell, 1e-60));
}

TEST_CASE("ell series at 0: leading coefficients", "[special]") {
  auto s = ell_series_at(Real(0L, 320), 12, 320);
  Real ell0 = log(2L * sqrt(Real::pi(320))) - 1L - Real::euler_gamma(320) / 2L;
  REQUIRE(close_rel(s.c[0], ell0, 1e-80));
  // ell_1 = -sum rho^-2 = +0.0461543...
  REQUIRE(close_abs(s.c[1], Real("0.0461543172958046", 320), 1e-15));
  REQUIRE(s.c[1] > 0L);
}

TEST_CASE("ell series constant term equals xi_eval ell", "[special][property]") {
  auto ctx = default_ctx();
  for (const char* sd : {"0", "0.5", "0.6", "1", "1.25", "2", "3", "10"}) {
    auto srs = ell_series_at(Real(sd, 256), 3, 256);
    auto x = xi_eval(Real(sd, 256), ctx);
    REQUIRE(abs(srs.c[0] - x.ell) <= max(abs(x.ell), Real(1L, 256)) * Real(1e-70, 64));
  }
}

TEST_CASE("ell series derivative matches central differences", "[special][oracle]") {
  // ell_1(tau) = ell'(tau): check against (ell(t+h)-ell(t-h))/2h with
  // h = 2^-40 at 400-bit precision (FD error ~ h^2 ~ 1e-24).
  PrecisionContext ctx(400, 16);
  Real h = Real::pow2(-40, 400);
  for (const char* sd : {"0.5", "2", "3"}) {
    Real t(sd, 400);
    auto srs = ell_series_at(t, 2, 400);
    Real fd = (xi_eval(t + h, ctx).ell - xi_eval(t - h, ctx).ell) / (2L * h);
    REQUIRE(close_abs(srs.c[1], fd, 1e-22));
  }
}

TEST_CASE("ell series domain errors", "[special]") {
  REQUIRE_THROWS_AS(ell_series_at(Real(-2L, 256), 4, 256), std::domain_error);
  REQUIRE_THROWS_AS(ell_series_at(Real(-3L, 256), 4, 256), std::domain_error);
}

TEST_CASE("ell base cache returns consistent quantized orders", "[special]") {
  const auto& a = ell_base_series(256, 10);
  REQUIRE(a.order() >= 10);
  REQUIRE(a.order() % 32 == 0);
  const auto& b = ell_base_series(256, a.order());
  REQUIRE(&a == &b);
  Real ell0 = log(2L * sqrt(Real::pi(320))) - 1L - Real::euler_gamma(320) / 2L;
  REQUIRE(close_rel(a.c[0], ell0, 1e-70));
}
