#include "driftcas/phys.hpp"

#include <cmath>
#include <string>

#include "driftcas/errors.hpp"

namespace driftcas::phys {

double matsubara_xi(std::int64_t n, double T) {
  if (!std::isfinite(T) || T <= 0.0) {
    throw DomainError("matsubara_xi: temperature must be finite and positive, got " +
                      std::to_string(T));
  }
  if (n < 0) throw DomainError("matsubara_xi: negative Matsubara index");
  if (n == 0) return 0.0;
  return 2.0 * pi * static_cast<double>(n) * k_B * T / hbar;
}

double sigma_gaussian(double sigma_per_ohm_cm) {
  if (!(sigma_per_ohm_cm >= 0.0) || !std::isfinite(sigma_per_ohm_cm)) {
    throw DomainError("sigma_gaussian: conductivity must be finite and non-negative");
  }
  return sigma_per_ohm_cm * units::gaussian_per_siemens_cm;
}

double thermal_wavelength(double T) {
  if (!std::isfinite(T) || T <= 0.0) throw DomainError("thermal_wavelength: T must be positive");
  return hbar * c / (k_B * T);
}

}  // namespace driftcas::phys
