#pragma once

// Casimir entropy S = -d(E/A)/dT by finite differences of the full free
// energy (all temperature dependence included: Matsubara frequencies and the
// material state), plus small-xi probes of the mode functions g^p.

#include <string>
#include <vector>

#include "driftcas/lifshitz.hpp"

namespace driftcas {

struct EntropyPoint {
  double T = 0.0;                 ///< K
  double S = 0.0;                 ///< erg / (cm^2 K)
  double fd_step = 0.0;           ///< K
  double richardson_error = 0.0;  ///< erg / (cm^2 K)
  std::vector<std::string> warnings;
};

/// Default step T/20, floored at 0.25 K.
double default_fd_step(double T);

/// Central difference with steps h and h/2, Richardson-combined.
/// fd_step <= 0 selects the default.
EntropyPoint entropy(const Geometry& geom, double T, double fd_step = 0.0,
                     const SumSettings& s = {});

/// Same, for an arbitrary temperature-dependent amplitude source factory.
using SourceFactory = std::function<AmplitudeSource(double T)>;
EntropyPoint entropy(const SourceFactory& make_source, double d, double T, double fd_step = 0.0,
                     const SumSettings& s = {});

struct GProbe {
  Polarization p = Polarization::TM;
  double k = 0.0;      ///< 1/cm
  double theta = 0.0;  ///< 2 pi k_B T / hbar, rad/s
  double g0 = 0.0;     ///< g at xi = 0
  double g_xi = 0.0;   ///< dg/dxi at 0+, s
  double g_xixi = 0.0; ///< d2g/dxi2 at 0+, s^2
  double g_xi_error = 0.0;
  double g_xixi_error = 0.0;
};

/// One-sided stencil on xi = {0, 1, 2, 3} x 1e-4 theta.
GProbe g_probe(Polarization p, double k, const Geometry& geom, double T);

struct NernstReport {
  std::vector<EntropyPoint> points;  ///< in the order of the input list
  /// |S| strictly decreasing with decreasing T over points with T <= 75 K
  bool low_T_monotone = false;
  /// |S(T_min)| / |S(T_max)|
  double low_to_high_ratio = 0.0;
  std::vector<std::string> diagnostics;
};

NernstReport nernst_sweep(const Geometry& geom, const std::vector<double>& temperatures,
                          const SumSettings& s = {});

}  // namespace driftcas
