#pragma once

// Imaginary-frequency reflection amplitudes of a vacuum/medium interface.
//
// All quantities on the imaginary axis are real, so everything is evaluated in
// real arithmetic. The xi = 0 terms always go through explicit static branches;
// expressions containing 4 pi sigma / xi are never evaluated at xi = 0.

#include <string>
#include <string_view>
#include <variant>

#include "driftcas/materials.hpp"

namespace driftcas {

/// One point (xi, k) on the imaginary-frequency / in-plane wavevector grid.
struct Mode {
  double xi = 0.0;  ///< rad/s, >= 0
  double k = 0.0;   ///< 1/cm, > 0

  /// sqrt(k^2 + xi^2/c^2)
  double gamma0() const;
  void validate() const;
};

enum class Polarization { TM, TE };

std::string_view to_string(Polarization p);

namespace model {
/// Fresnel with the bare permittivity only.
struct Bare {
  bool operator==(const Bare&) const = default;
};
/// Fresnel with eps(i xi) + 4 pi sigma0 / xi.
struct Conductivity {
  double sigma0 = 0.0;  ///< 1/s (Gaussian)
  bool operator==(const Conductivity&) const = default;
};
/// Debye-screened drift amplitudes from linearized Boltzmann transport.
struct Drift {
  bool operator==(const Drift&) const = default;
};
/// Same physics expressed through a k-dependent permittivity tensor.
struct Nonlocal {
  bool operator==(const Nonlocal&) const = default;
};
}  // namespace model

using ReflectionModel = std::variant<model::Bare, model::Conductivity, model::Drift, model::Nonlocal>;

std::string model_name(const ReflectionModel& m);

struct Amplitudes {
  double tm = 0.0;
  double te = 0.0;
};

/// Decay wavevectors of the longitudinal and transverse branches and the
/// combination chi entering the TM amplitude.
struct DriftQuantities {
  double eta_L = 0.0;
  double eta_T = 0.0;
  double chi = 0.0;
  double eps_perp = 0.0;  ///< eps + 4 pi sigma(i xi)/xi, the transverse response
};

double eta_L(const Mode& mode, const MaterialState& state, double eps_bar);

/// For xi == 0 returns the limit k.
double eta_T(const Mode& mode, const MaterialState& state, double eps_bar);

/// chi = (1/eta_L) [k^2 + eps (xi/c)^2 (eta_L eta_T - k^2) / (eta_T^2 - k^2)].
/// At xi == 0 with eta_T == k the analytic limit k^2 / eta_L is returned.
/// Throws EvaluationError for a degenerate denominator at xi > 0.
double chi(const Mode& mode, double etaL, double etaT, double eps_bar);

/// eta_L, eta_T and chi in a cancellation-free arrangement (uses eps_perp
/// instead of eta_T^2 - k^2). Requires xi > 0.
DriftQuantities drift_quantities(const Mode& mode, const MaterialState& state, double eps_bar);

/// Fresnel amplitudes for a local permittivity eps on the imaginary axis,
/// written so that eps -> 1 gives exactly zero.
double fresnel_tm(const Mode& mode, double eps);
double fresnel_te(const Mode& mode, double eps);

/// Static (xi = 0) drift TM amplitude (eps0 q - k)/(eps0 q + k), q = sqrt(k^2 + kappa^2).
double drift_tm_static(double k, double kappa, double eps0);

/// Both amplitudes for one model, using a precomputed material state.
Amplitudes amplitudes(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec,
                      const MaterialState& state);

double r_tm(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec, double T);
double r_te(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec, double T);

/// Amplitudes obtained by numerically solving the interface boundary-value
/// problem (continuity of E_x, H_y and eps E_z for TM; E_x, E_y, H_x for TE).
struct BoundarySolution {
  double r_tm = 0.0;
  double r_te = 0.0;
  double tm_transverse = 0.0;    ///< transmitted transverse-branch amplitude (TM)
  double tm_longitudinal = 0.0;  ///< transmitted longitudinal-branch amplitude (TM)
  double te_transverse = 0.0;
  double te_longitudinal = 0.0;  ///< forced to zero by E_x continuity
};

BoundarySolution r_oracle_bc(const Mode& mode, double etaL, double etaT, double eps_bar);

}  // namespace driftcas
