#pragma once

// Physical constants and unit conversions. Everything inside the library is
// Gaussian-CGS; practical units are converted once at the CLI/config boundary.

#include <cstdint>

namespace driftcas::phys {

// CODATA 2018, Gaussian-CGS.
inline constexpr double hbar = 1.054571817e-27;        // erg s
inline constexpr double k_B = 1.380649e-16;            // erg / K
inline constexpr double c = 2.99792458e10;             // cm / s
inline constexpr double e_charge = 4.803204712570263e-10;  // statC
inline constexpr double m_electron = 9.1093837015e-28;  // g

inline constexpr double pi = 3.141592653589793238462643383279502884;

namespace units {
inline constexpr double cm_per_um = 1e-4;
inline constexpr double erg_per_eV = 1.602176634e-12;
inline constexpr double s_per_ps = 1e-12;
/// sigma[1/s] = factor * sigma[1/(Ohm cm)]; equals 1e-9 c^2 with c in cm/s.
inline constexpr double gaussian_per_siemens_cm = 1e-9 * c * c;
}  // namespace units

/// n-th bosonic Matsubara frequency 2 pi n k_B T / hbar in rad/s.
double matsubara_xi(std::int64_t n, double T);

/// Converts a dc conductivity in 1/(Ohm cm) to the Gaussian value in 1/s.
double sigma_gaussian(double sigma_per_ohm_cm);

/// Thermal wavelength hbar c / (k_B T) in cm.
double thermal_wavelength(double T);

inline constexpr double um_to_cm(double um) { return um * units::cm_per_um; }
inline constexpr double cm_to_um(double cm) { return cm / units::cm_per_um; }
inline constexpr double eV_to_erg(double eV) { return eV * units::erg_per_eV; }
inline constexpr double erg_to_eV(double erg) { return erg / units::erg_per_eV; }
inline constexpr double ps_to_s(double ps) { return ps * units::s_per_ps; }
inline constexpr double s_to_ps(double s) { return s / units::s_per_ps; }

}  // namespace driftcas::phys
