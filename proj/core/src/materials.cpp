#include "driftcas/materials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"

namespace driftcas {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

void require_positive_T(double T, const char* what) {
  if (!std::isfinite(T) || T <= 0.0) {
    throw DomainError(std::string(what) + ": temperature must be positive, got " +
                      std::to_string(T));
  }
}

}  // namespace

double SellmeierPermittivity::operator()(double xi) const {
  const double w2 = omega0 * omega0;
  return eps_inf + w2 * (eps0 - eps_inf) / (xi * xi + w2);
}

void SellmeierPermittivity::validate() const {
  if (!(eps0 > eps_inf) || !(eps_inf >= 1.0) || !(omega0 > 0.0)) {
    throw DomainError("Sellmeier permittivity requires eps0 > eps_inf >= 1 and omega0 > 0");
  }
}

void MaterialSpec::validate() const {
  permittivity.validate();
  if (!(nc_prefactor > 0.0) || !(nv_prefactor > 0.0)) {
    throw DomainError("material '" + name + "': density-of-states prefactors must be positive");
  }
  if (!(mass_ratio > 0.0)) throw DomainError("material '" + name + "': mass_ratio must be positive");
  if (!(gap_E0 > 0.0)) throw DomainError("material '" + name + "': gap_E0 must be positive");
  if (!(gap_beta >= 0.0)) throw DomainError("material '" + name + "': gap_beta must be non-negative");
  if (reference_sigma0 && !(*reference_sigma0 >= 0.0)) {
    throw DomainError("material '" + name + "': reference conductivity must be non-negative");
  }
}

double bare_eps(const MaterialSpec& spec, double xi) {
  require_finite(xi, "bare_eps");
  if (xi < 0.0) throw DomainError("bare_eps: xi must be non-negative");
  return spec.permittivity(xi);
}

double band_gap(const MaterialSpec& spec, double T) {
  require_finite(T, "band_gap");
  if (T < 0.0) throw DomainError("band_gap: negative temperature");
  return spec.gap_E0 - spec.gap_alpha * T * T / (T + spec.gap_beta);
}

double conduction_dos(const MaterialSpec& spec, double T) {
  require_positive_T(T, "conduction_dos");
  return spec.nc_prefactor * T * std::sqrt(T);
}

double valence_dos(const MaterialSpec& spec, double T) {
  require_positive_T(T, "valence_dos");
  return spec.nv_prefactor * T * std::sqrt(T);
}

double carrier_density(const MaterialSpec& spec, double T) {
  require_positive_T(T, "carrier_density");
  const double nc = conduction_dos(spec, T);
  const double nv = valence_dos(spec, T);
  const double n = std::sqrt(nc * nv) * std::exp(-band_gap(spec, T) / (2.0 * phys::k_B * T));
  return spec.carrier_doubling ? 2.0 * n : n;
}

double relaxation_time(const MaterialSpec& spec, double T) {
  require_finite(T, "relaxation_time");
  if (T < 0.0) throw DomainError("relaxation_time: negative temperature");
  const double t = T / 300.0;
  const double tau = spec.tau0 + spec.tau1 * std::exp(spec.tau_C1 * t * t + spec.tau_C2 * t);
  if (!(tau > 0.0)) {
    throw ModelValidityError("relaxation_time: fitted tau(T) is non-positive for material '" +
                             spec.name + "' at T=" + std::to_string(T) + " K");
  }
  return tau;
}

MaterialState material_state(const MaterialSpec& spec, double T) {
  require_positive_T(T, "material_state");
  MaterialState s;
  s.T = T;
  s.out_of_range = T > kValidityTmax;
  s.n0 = carrier_density(spec, T);
  s.tau = relaxation_time(spec, T);

  const double m = spec.mass_ratio * phys::m_electron;
  const double kT = phys::k_B * T;
  const double e = phys::e_charge;

  s.v_T = std::sqrt(kT / m);
  s.mobility = e * s.tau / m;
  s.D = s.v_T * s.v_T * s.tau;
  s.sigma0 = e * e * s.n0 * s.tau / m;
  s.kappa = std::sqrt(4.0 * phys::pi * e * e * s.n0 / (spec.permittivity.eps0 * kT));
  s.R_D = s.kappa > 0.0 ? 1.0 / s.kappa : std::numeric_limits<double>::infinity();
  return s;
}

double omega_c(const MaterialState& state, const MaterialSpec& spec, double xi) {
  // 4 pi e n0 mu / eps(i xi) with mu = e tau / m, i.e. 4 pi sigma0 / eps.
  return 4.0 * phys::pi * state.sigma0 / bare_eps(spec, xi);
}

MaterialSpec germanium() {
  using namespace phys;
  MaterialSpec m;
  m.name = "Ge";
  m.permittivity = {16.2, 1.1, 5.0e15};
  m.nc_prefactor = 1.98e15;
  m.nv_prefactor = 9.6e14;
  m.gap_E0 = eV_to_erg(0.742);
  m.gap_alpha = eV_to_erg(4.8e-4);
  m.gap_beta = 235.0;
  m.tau0 = ps_to_s(0.26);
  m.tau1 = ps_to_s(1.49);
  m.tau_C1 = -0.434;
  m.tau_C2 = 1.322;
  m.mass_ratio = 0.12;
  m.reference_sigma0 = sigma_gaussian(1.0 / 43.0);
  return m;
}

MaterialSpec silicon() {
  using namespace phys;
  MaterialSpec m;
  m.name = "Si";
  m.permittivity = {11.87, 1.035, 6.6e15};
  m.nc_prefactor = 6.2e15;
  m.nv_prefactor = 3.5e15;
  m.gap_E0 = eV_to_erg(1.17);
  m.gap_alpha = eV_to_erg(4.73e-4);
  m.gap_beta = 636.0;
  m.tau0 = ps_to_s(1.0);
  m.tau1 = ps_to_s(-0.538);
  m.tau_C1 = 0.0015;
  m.tau_C2 = -0.09;
  m.mass_ratio = 0.26;
  m.reference_sigma0 = sigma_gaussian(1.0 / 2.3e5);
  return m;
}

std::optional<MaterialSpec> builtin_material(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ge" || lower == "germanium") return germanium();
  if (lower == "si" || lower == "silicon") return silicon();
  return std::nullopt;
}

}  // namespace driftcas
