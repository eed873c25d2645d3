#pragma once

// Matsubara-summed Casimir-Lifshitz free energy per area and pressure between
// two planar half-spaces separated by a vacuum gap d.
//
// Each Matsubara term is an integral over the in-plane wavevector. With the
// substitution u = 2 d gamma0 (gamma0 = sqrt(k^2 + xi^2/c^2)) it becomes
//
//   E_n = w_n k_B T / (8 pi d^2) sum_p  int_{u_n}^inf u ln(1 - r1 r2 e^{-u}) du
//   P_n = w_n k_B T / (8 pi d^3) sum_p  int_{u_n}^inf u^2 r1 r2 e^{-u} / (1 - r1 r2 e^{-u}) du
//
// with u_n = 2 d xi_n / c and w_0 = 1/2, w_n = 1 otherwise. Pressure is
// reported as a positive number for attraction, i.e. P = dE/dd.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "driftcas/materials.hpp"
#include "driftcas/reflection.hpp"

namespace driftcas {

struct Plate {
  MaterialSpec material;
  ReflectionModel model = model::Drift{};
  bool operator==(const Plate&) const = default;
};

struct Geometry {
  double d = 0.0;  ///< gap, cm
  Plate plate1;
  Plate plate2;

  void validate() const;
};

/// Two identical half-spaces.
Geometry identical_plates(const MaterialSpec& spec, const ReflectionModel& model, double d);

struct TermBreakdown {
  std::int64_t n = 0;
  double te = 0.0;  ///< includes the 1/2 weight for n = 0
  double tm = 0.0;
};

struct SummationResult {
  double value = 0.0;
  std::vector<TermBreakdown> per_n_terms;
  std::int64_t n_truncated_at = 0;  ///< index of the last included term
  double quadrature_error_estimate = 0.0;
  double truncation_error_estimate = 0.0;
  std::vector<std::string> warnings;
};

struct SumSettings {
  double quad_rel_tol = 1e-10;
  /// Stop after three successive terms each below sum_rel_tol * |accumulated|.
  double sum_rel_tol = 1e-10;
  std::int64_t max_terms = 2'000'000;
  /// Terms evaluated concurrently per batch; does not affect results.
  int batch = 32;
};

/// Reflection amplitudes of both plates at a mode, for Matsubara index n.
struct PlatePair {
  Amplitudes plate1;
  Amplitudes plate2;
};
using AmplitudeSource = std::function<PlatePair(std::int64_t n, const Mode& mode)>;

/// Amplitude source for a geometry at temperature T (material states cached).
AmplitudeSource geometry_source(const Geometry& geom, double T);

/// Bare-permittivity amplitudes for the same plates.
AmplitudeSource bare_source(const Geometry& geom, double T);

/// Bare amplitudes except the n = 0 TM amplitude, which is set to 1.
AmplitudeSource perfect_static_tm_source(const Geometry& geom, double T);

/// g^p = ln(1 - r1 r2 exp(-2 d gamma0)).
double g_mode(Polarization p, const Mode& mode, const Geometry& geom, double T);

/// g from the product r1 r2 and the exponent u = 2 d gamma0.
double g_from_product(double r1r2, double u);

SummationResult free_energy_per_area(const Geometry& geom, double T, const SumSettings& s = {});
SummationResult pressure(const Geometry& geom, double T, const SumSettings& s = {});

SummationResult free_energy_per_area(const AmplitudeSource& src, double d, double T,
                                     const SumSettings& s = {});
SummationResult pressure(const AmplitudeSource& src, double d, double T,
                         const SumSettings& s = {});

/// E_model / E_bare with identical settings in numerator and denominator.
double ratio_to_bare(const Geometry& geom, double T, const SumSettings& s = {});

}  // namespace driftcas
