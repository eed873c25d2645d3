#pragma once

#include <functional>

namespace driftcas::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< absolute error estimate
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (21-point) on [a, b]: the panel with the
/// largest error estimate is bisected until the total estimate falls below
/// max(rel_tol * |value|, rel_tol * L1, abs_floor). Throws IntegrationError when
/// that is not reached within max_depth levels or 4096 panels.
Result integrate(const Integrand& f, double a, double b, double rel_tol, double abs_floor = 0.0,
                 unsigned max_depth = 30);

/// Integral of f over [0, inf) through x = scale * tan(t), t in [0, pi/2).
Result integrate_half_line(const Integrand& f, double scale, double rel_tol,
                           double abs_floor = 0.0);

/// Integral of f over [x0, inf) through x = x0 + scale * tan(t).
Result integrate_from(const Integrand& f, double x0, double scale, double rel_tol,
                      double abs_floor = 0.0);

/// Integral over [0, inf) of an integrand with structure on two length
/// scales: [0, min] directly, decade panels up to max, tan-mapped tail.
Result integrate_multiscale(const Integrand& f, double s1, double s2, double rel_tol,
                            double abs_floor = 0.0);

struct TailOptions {
  double rel_tol = 1e-10;     ///< per-panel relative tolerance
  double panel_width = 1.0;   ///< in units of the integration variable
  double stop_ratio = 1e-16;  ///< stop when a panel adds less than this fraction
  int max_panels = 4000;
};

/// Integral over [u0, inf) of an integrand damped at least like exp(-u),
/// summed panel by panel until panels become negligible.
Result integrate_damped_tail(const Integrand& f, double u0, const TailOptions& opt);

}  // namespace driftcas::quad
