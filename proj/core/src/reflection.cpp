#include "driftcas/reflection.hpp"

#include <cmath>
#include <string>

#include "driftcas/errors.hpp"
#include "driftcas/nonlocal.hpp"
#include "driftcas/phys.hpp"

namespace driftcas {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double xi_over_c_sq(const Mode& m) {
  const double x = m.xi / phys::c;
  return x * x;
}

// 4 pi sigma(i xi) / xi with sigma(i xi) = sigma0 / (1 + xi tau).
double conduction_perm(const MaterialState& s, double xi) {
  return 4.0 * phys::pi * s.sigma0 / (xi * (1.0 + xi * s.tau));
}

}  // namespace

double Mode::gamma0() const { return std::hypot(k, xi / phys::c); }

void Mode::validate() const {
  if (!std::isfinite(xi) || xi < 0.0) throw DomainError("mode: xi must be finite and >= 0");
  if (!std::isfinite(k) || k <= 0.0) throw DomainError("mode: k must be finite and > 0");
}

std::string_view to_string(Polarization p) { return p == Polarization::TM ? "TM" : "TE"; }

std::string model_name(const ReflectionModel& m) {
  return std::visit(overloaded{[](const model::Bare&) { return std::string("bare"); },
                               [](const model::Conductivity&) { return std::string("cond"); },
                               [](const model::Drift&) { return std::string("drift"); },
                               [](const model::Nonlocal&) { return std::string("nonlocal"); }},
                    m);
}

double eta_L(const Mode& mode, const MaterialState& state, double eps_bar) {
  mode.validate();
  const double screening =
      4.0 * phys::pi * phys::e_charge * phys::e_charge * state.n0 / (eps_bar * phys::k_B * state.T);
  const double diffusion = mode.xi * (1.0 + mode.xi * state.tau) / state.D;
  return std::sqrt(mode.k * mode.k + screening + diffusion);
}

double eta_T(const Mode& mode, const MaterialState& state, double eps_bar) {
  mode.validate();
  if (mode.xi == 0.0) return mode.k;
  const double eps_perp = eps_bar + conduction_perm(state, mode.xi);
  return std::sqrt(mode.k * mode.k + eps_perp * xi_over_c_sq(mode));
}

double chi(const Mode& mode, double etaL, double etaT, double eps_bar) {
  mode.validate();
  const double k2 = mode.k * mode.k;
  const double denom = (etaT - mode.k) * (etaT + mode.k);
  if (denom == 0.0) {
    if (mode.xi == 0.0) return k2 / etaL;
    throw EvaluationError("chi: degenerate denominator eta_T^2 - k^2 = 0", mode.k, mode.xi);
  }
  return (k2 + eps_bar * xi_over_c_sq(mode) * (etaL * etaT - k2) / denom) / etaL;
}

DriftQuantities drift_quantities(const Mode& mode, const MaterialState& state, double eps_bar) {
  mode.validate();
  if (!(mode.xi > 0.0)) throw DomainError("drift_quantities: xi must be > 0 (use static branch)");
  DriftQuantities q;
  const double k2 = mode.k * mode.k;
  q.eps_perp = eps_bar + conduction_perm(state, mode.xi);
  q.eta_T = std::sqrt(k2 + q.eps_perp * xi_over_c_sq(mode));
  q.eta_L = eta_L(mode, state, eps_bar);
  // eps (xi/c)^2 / (eta_T^2 - k^2) == eps / eps_perp exactly.
  q.chi = (k2 + (eps_bar / q.eps_perp) * (q.eta_L * q.eta_T - k2)) / q.eta_L;
  return q;
}

double fresnel_tm(const Mode& mode, double eps) {
  const double a = xi_over_c_sq(mode);
  const double k2 = mode.k * mode.k;
  const double g0 = mode.gamma0();
  const double eta = std::sqrt(k2 + eps * a);
  const double sum = eps * g0 + eta;
  return (eps - 1.0) * ((eps + 1.0) * k2 + eps * a) / (sum * sum);
}

double fresnel_te(const Mode& mode, double eps) {
  const double a = xi_over_c_sq(mode);
  const double g0 = mode.gamma0();
  const double eta = std::sqrt(mode.k * mode.k + eps * a);
  const double sum = g0 + eta;
  return (1.0 - eps) * a / (sum * sum);
}

double drift_tm_static(double k, double kappa, double eps0) {
  const double q = std::hypot(k, kappa);
  return (eps0 * q - k) / (eps0 * q + k);
}

Amplitudes amplitudes(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec,
                      const MaterialState& state) {
  mode.validate();
  const double eps0 = spec.permittivity.eps0;

  if (mode.xi == 0.0) {
    // Static branches. TE is always transparent: a static magnetic field
    // penetrates a non-magnetic medium.
    return std::visit(
        overloaded{
            [&](const model::Bare&) { return Amplitudes{(eps0 - 1.0) / (eps0 + 1.0), 0.0}; },
            [&](const model::Conductivity& c) {
              return Amplitudes{c.sigma0 > 0.0 ? 1.0 : (eps0 - 1.0) / (eps0 + 1.0), 0.0};
            },
            [&](const model::Drift&) {
              return Amplitudes{drift_tm_static(mode.k, state.kappa, eps0), 0.0};
            },
            [&](const model::Nonlocal&) {
              return Amplitudes{drift_tm_static(mode.k, state.kappa, eps0), 0.0};
            }},
        model);
  }

  const double eps = spec.permittivity(mode.xi);
  return std::visit(
      overloaded{[&](const model::Bare&) {
                   return Amplitudes{fresnel_tm(mode, eps), fresnel_te(mode, eps)};
                 },
                 [&](const model::Conductivity& c) {
                   const double e = eps + 4.0 * phys::pi * c.sigma0 / mode.xi;
                   return Amplitudes{fresnel_tm(mode, e), fresnel_te(mode, e)};
                 },
                 [&](const model::Drift&) {
                   const DriftQuantities q = drift_quantities(mode, state, eps);
                   const double eg = eps * mode.gamma0();
                   const double sum = mode.gamma0() + q.eta_T;
                   return Amplitudes{(eg - q.chi) / (eg + q.chi),
                                     (1.0 - q.eps_perp) * xi_over_c_sq(mode) / (sum * sum)};
                 },
                 [&](const model::Nonlocal&) { return nonlocal::amplitudes(mode, spec, state); }},
      model);
}

double r_tm(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec, double T) {
  return amplitudes(model, mode, spec, material_state(spec, T)).tm;
}

double r_te(const ReflectionModel& model, const Mode& mode, const MaterialSpec& spec, double T) {
  return amplitudes(model, mode, spec, material_state(spec, T)).te;
}

}  // namespace driftcas
