#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace driftcas {

/// Sellmeier-type bare permittivity on the imaginary frequency axis,
///   eps(i xi) = eps_inf + omega0^2 (eps0 - eps_inf) / (xi^2 + omega0^2).
/// Excludes the free-carrier response; the same fit is used at every T.
struct SellmeierPermittivity {
  double eps0 = 1.0;     ///< static value
  double eps_inf = 1.0;  ///< high-frequency value
  double omega0 = 1.0;   ///< resonance, rad/s

  double operator()(double xi) const;
  void validate() const;
  bool operator==(const SellmeierPermittivity&) const = default;
};

/// Fitted model parameters for one low-carrier-density medium. All fields are
/// stored in Gaussian-CGS; the built-in sets are converted from practical units
/// where they are defined.
struct MaterialSpec {
  std::string name;
  SellmeierPermittivity permittivity;
  double nc_prefactor = 0.0;  ///< cm^-3 K^-3/2
  double nv_prefactor = 0.0;  ///< cm^-3 K^-3/2
  double gap_E0 = 0.0;        ///< erg
  double gap_alpha = 0.0;     ///< erg / K
  double gap_beta = 0.0;      ///< K
  double tau0 = 0.0;          ///< s
  double tau1 = 0.0;          ///< s
  double tau_C1 = 0.0;
  double tau_C2 = 0.0;
  double mass_ratio = 1.0;  ///< m / m_e
  /// Electrons and holes treated as dynamically equivalent; doubles n0.
  bool carrier_doubling = true;
  /// Measured dc conductivity (1/s) used by the additive-conductivity model
  /// when no explicit value is given.
  std::optional<double> reference_sigma0;

  void validate() const;
  bool operator==(const MaterialSpec&) const = default;
};

/// Temperature-derived transport quantities of one medium.
struct MaterialState {
  double T = 0.0;         ///< K
  double n0 = 0.0;        ///< cm^-3, doubled when carrier_doubling is set
  double tau = 0.0;       ///< s
  double sigma0 = 0.0;    ///< 1/s, e^2 n0 tau / m
  double v_T = 0.0;       ///< cm/s
  double mobility = 0.0;  ///< e tau / m
  double D = 0.0;         ///< cm^2/s
  double kappa = 0.0;     ///< 1/cm, inverse Debye radius
  double R_D = 0.0;       ///< cm; +inf when n0 == 0
  bool out_of_range = false;  ///< T outside the fitted validity window
};

inline constexpr double kValidityTmax = 400.0;

double bare_eps(const MaterialSpec& spec, double xi);

/// Band gap in erg.
double band_gap(const MaterialSpec& spec, double T);

/// Effective densities of states, cm^-3.
double conduction_dos(const MaterialSpec& spec, double T);
double valence_dos(const MaterialSpec& spec, double T);

/// Intrinsic carrier density, cm^-3 (doubled when spec.carrier_doubling).
double carrier_density(const MaterialSpec& spec, double T);

/// Relaxation time in s. Throws ModelValidityError if the fit goes non-positive.
double relaxation_time(const MaterialSpec& spec, double T);

MaterialState material_state(const MaterialSpec& spec, double T);

/// Frequency-dependent conduction rate 4 pi sigma0 / eps(i xi), rad/s.
double omega_c(const MaterialState& state, const MaterialSpec& spec, double xi);

MaterialSpec germanium();
MaterialSpec silicon();

/// Built-in by name ("Ge" or "Si", case-insensitive); nullopt otherwise.
std::optional<MaterialSpec> builtin_material(std::string_view name);

}  // namespace driftcas
