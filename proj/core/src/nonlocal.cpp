#include "driftcas/nonlocal.hpp"

#include <algorithm>
#include <cmath>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/quadrature.hpp"

namespace driftcas::nonlocal {

namespace {

struct Tilde {
  double b;  // ~h_b
  double c;  // ~h_c
};

// ~h_b and ~h_c for a q_z-independent eps_perp = P, written without the
// 1 - 1 cancellation (both vanish identically for P == 1).
Tilde tilde_bc(double k, double a, double P) {
  const double g0 = std::sqrt(k * k + a);
  const double eta = std::sqrt(k * k + P * a);
  const double dP = (P - 1.0) * a;
  return {-dP / (eta * (g0 + eta)), -dP * (k + g0 + eta) / ((g0 + eta) * eta * (k + eta))};
}

// Z_TM - 1 from tilded integrals. k - g0 is rewritten as -a / (k + g0).
double z_tm_minus_one(double k, double a, double ht_a, double ht_b, double ht_c) {
  const double g0 = std::sqrt(k * k + a);
  const double g02 = g0 * g0;
  return (k / g0) * ht_a + (a / g02) * ht_b - (k * a / ((k + g0) * g02)) * ht_c;
}

void finish(HFunctions& hf, double k, double a) {
  const double zm1 = z_tm_minus_one(k, a, hf.ht_a, hf.ht_b, hf.ht_c);
  const double z = 1.0 + zm1;
  if (z == 0.0) throw DomainError("H-functions: vanishing TM surface impedance");
  hf.H_tm = 1.0 / z;
  hf.Hm1_tm = -zm1 / z;
  hf.H_te = 1.0 + hf.ht_b;
  hf.Hm1_te = hf.ht_b;
}

HFunctions closed_form(double P, double L, const Mode& mode) {
  const double k = mode.k;
  const double a = (mode.xi / phys::c) * (mode.xi / phys::c);
  HFunctions hf;
  hf.gamma0 = mode.gamma0();
  const double eta = std::sqrt(k * k + P * a);
  hf.h_a = 1.0 / L;
  hf.h_b = hf.gamma0 / eta;
  hf.h_c = hf.gamma0 * (k + hf.gamma0) / (eta * (k + eta));
  hf.ht_a = (1.0 - L) / L;
  const Tilde t = tilde_bc(k, a, P);
  hf.ht_b = t.b;
  hf.ht_c = t.c;
  finish(hf, k, a);
  return hf;
}

HFunctions quadrature_form(const PermittivityTensor& tensor, const Mode& mode, double rel_tol) {
  const double k = mode.k;
  const double xi = mode.xi;
  const double a = (xi / phys::c) * (xi / phys::c);
  HFunctions hf;
  hf.gamma0 = mode.gamma0();
  const double g0 = hf.gamma0;

  auto perp = [&](double qz) { return tensor.eps_perp(k, qz, xi); };
  auto par = [&](double qz) { return tensor.eps_par(k, qz, xi); };

  // Scales for the tan map: k for the Coulomb-like integrand, the transverse
  // decay wavevector for the other two.
  const double s_a = k;
  const double s_b = std::sqrt(k * k + std::max(perp(0.0), 1.0) * a);

  auto s_other = [&](double scale) { return scale == s_a ? s_b : s_a; };

  const double pref_a = 2.0 * k / phys::pi;
  const double pref_b = 2.0 * g0 / phys::pi;
  const double pref_c = 2.0 * k * g0 * (k + g0) / phys::pi;

  auto run = [&](const quad::Integrand& f, double scale) {
    const quad::Result r = quad::integrate_multiscale(f, scale, s_other(scale), rel_tol);
    hf.quad_error = std::max(hf.quad_error, r.error);
    return r.value;
  };

  hf.h_a = pref_a * run([&](double qz) { return 1.0 / ((k * k + qz * qz) * par(qz)); }, s_a);
  hf.h_b = pref_b * run([&](double qz) { return 1.0 / (k * k + qz * qz + perp(qz) * a); }, s_b);
  hf.h_c = pref_c * run(
                        [&](double qz) {
                          const double q2 = k * k + qz * qz;
                          return 1.0 / (q2 * (q2 + perp(qz) * a));
                        },
                        s_b);

  hf.ht_a = pref_a * run(
                         [&](double qz) {
                           const double L = par(qz);
                           return (1.0 - L) / ((k * k + qz * qz) * L);
                         },
                         s_a);
  hf.ht_b = pref_b * run(
                         [&](double qz) {
                           const double q2 = k * k + qz * qz;
                           const double P = perp(qz);
                           return -(P - 1.0) * a / ((q2 + P * a) * (q2 + a));
                         },
                         s_b);
  hf.ht_c = pref_c * run(
                         [&](double qz) {
                           const double q2 = k * k + qz * qz;
                           const double P = perp(qz);
                           return -(P - 1.0) * a / (q2 * (q2 + P * a) * (q2 + a));
                         },
                         s_b);
  finish(hf, k, a);
  return hf;
}

}  // namespace

double eps_perp_drift(double /*k*/, double xi, const MaterialState& state, double eps_bar) {
  if (!(xi > 0.0)) throw DomainError("eps_perp_drift: xi must be > 0 (use the static tensor)");
  return eps_bar + 4.0 * phys::pi * state.sigma0 / (xi * (1.0 + xi * state.tau));
}

double eps_par_drift(double k, double xi, const MaterialState& state, double eps_bar) {
  const Mode mode{xi, k};
  mode.validate();
  if (!(xi > 0.0)) throw DomainError("eps_par_drift: xi must be > 0 (use the static tensor)");
  const double a = (xi / phys::c) * (xi / phys::c);
  const double g0 = mode.gamma0();
  const DriftQuantities q = drift_quantities(mode, state, eps_bar);
  const Tilde t = tilde_bc(k, a, q.eps_perp);
  // Z_TM must equal chi / (eps g0); solve the Z_TM expression for ~h_a.
  const double zm1 = (q.chi - eps_bar * g0) / (eps_bar * g0);
  const double rest = (a / (g0 * g0)) * t.b - (k * a / ((k + g0) * g0 * g0)) * t.c;
  const double ht_a = (g0 / k) * (zm1 - rest);
  const double inv_L = 1.0 + ht_a;
  if (!(std::abs(inv_L) > 0.0)) {
    throw EvaluationError("eps_par_drift: vanishing bracket", k, xi);
  }
  return 1.0 / inv_L;
}

PermittivityTensor drift_tensor(const MaterialSpec& spec, const MaterialState& state) {
  PermittivityTensor t;
  const SellmeierPermittivity eps = spec.permittivity;
  t.eps_perp = [eps, state](double k, double, double xi) {
    return eps_perp_drift(k, xi, state, eps(xi));
  };
  t.eps_par = [eps, state](double k, double, double xi) {
    return eps_par_drift(k, xi, state, eps(xi));
  };
  t.qz_dependent = false;
  return t;
}

PermittivityTensor static_debye_tensor(const MaterialSpec& spec, const MaterialState& state) {
  PermittivityTensor t;
  const double eps0 = spec.permittivity.eps0;
  const double kappa2 = state.kappa * state.kappa;
  t.eps_perp = [eps0](double, double, double) { return eps0; };
  t.eps_par = [eps0, kappa2](double k, double qz, double) {
    return eps0 * (1.0 + kappa2 / (k * k + qz * qz));
  };
  t.qz_dependent = true;
  return t;
}

PermittivityTensor vacuum_tensor() {
  PermittivityTensor t;
  t.eps_perp = [](double, double, double) { return 1.0; };
  t.eps_par = [](double, double, double) { return 1.0; };
  return t;
}

HFunctions h_integrals(const PermittivityTensor& tensor, const Mode& mode, Method method,
                       double rel_tol) {
  mode.validate();
  if (!(mode.xi > 0.0)) throw DomainError("h_integrals: xi must be > 0");
  if (method == Method::Closed) {
    if (tensor.qz_dependent) {
      throw DomainError("h_integrals: closed form requires a q_z-independent tensor");
    }
    return closed_form(tensor.eps_perp(mode.k, 0.0, mode.xi), tensor.eps_par(mode.k, 0.0, mode.xi),
                       mode);
  }
  return quadrature_form(tensor, mode, rel_tol);
}

double H_tm(const HFunctions& hf) { return hf.H_tm; }
double H_te(const HFunctions& hf) { return hf.H_te; }

double r_from_H(double H) {
  if (H == -1.0) throw DomainError("r_from_H: pole at H = -1");
  if (std::isinf(H)) return 1.0;
  return (H - 1.0) / (H + 1.0);
}

double r_from_H_minus_one(double Hm1) {
  if (Hm1 == -2.0) throw DomainError("r_from_H: pole at H = -1");
  return Hm1 / (Hm1 + 2.0);
}

Amplitudes amplitudes_from_tensor(const PermittivityTensor& tensor, const Mode& mode, Method method,
                                  double rel_tol) {
  const HFunctions hf = h_integrals(tensor, mode, method, rel_tol);
  return {r_from_H_minus_one(hf.Hm1_tm), r_from_H_minus_one(hf.Hm1_te)};
}

Amplitudes amplitudes(const Mode& mode, const MaterialSpec& spec, const MaterialState& state) {
  mode.validate();
  if (mode.xi == 0.0) {
    return {drift_tm_static(mode.k, state.kappa, spec.permittivity.eps0), 0.0};
  }
  const double eps = spec.permittivity(mode.xi);
  const double P = eps_perp_drift(mode.k, mode.xi, state, eps);
  const double L = eps_par_drift(mode.k, mode.xi, state, eps);
  const HFunctions hf = closed_form(P, L, mode);
  return {r_from_H_minus_one(hf.Hm1_tm), r_from_H_minus_one(hf.Hm1_te)};
}

}  // namespace driftcas::nonlocal
