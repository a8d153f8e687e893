#pragma once

#include <mpfr.h>

#include <stdexcept>

namespace hpli {

/// Working-precision settings threaded through every numeric operation.
///
/// A fixed context makes every operation a pure function of its inputs:
/// repeated calls return bit-identical results.  Internal escalation
/// (guard bits, series-order head-room) is always a deterministic
/// function of the context and the arguments.
struct PrecisionContext {
  mpfr_prec_t bits = 256;   // binary mantissa precision of results
  int series_order = 64;    // default truncation order K
  double rel_tol = 1e-25;   // route-agreement / truncation target
  int quad_points = 64;     // Gauss-Legendre nodes per panel

  PrecisionContext() = default;

  PrecisionContext(mpfr_prec_t bits_, int series_order_, double rel_tol_ = 1e-25,
                   int quad_points_ = 64)
      : bits(bits_), series_order(series_order_), rel_tol(rel_tol_), quad_points(quad_points_) {
    validate();
  }

  void validate() const {
    if (bits < 64) throw std::invalid_argument("PrecisionContext: bits must be >= 64");
    if (series_order < 2) throw std::invalid_argument("PrecisionContext: series_order must be >= 2");
    if (!(rel_tol > 0)) throw std::invalid_argument("PrecisionContext: rel_tol must be > 0");
    if (quad_points < 4) throw std::invalid_argument("PrecisionContext: quad_points must be >= 4");
  }
};

}  // namespace hpli
