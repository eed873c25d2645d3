#pragma once

// Spatial-dispersion formulation of the surface response.
//
// A uniaxial tensor diag(eps_perp, eps_perp, eps_par) that may depend on the
// bulk wavevector q = (k, q_z) enters through three q_z integrals h_a, h_b,
// h_c. With tilde denoting "minus the same integral for eps == 1":
//
//   H_TE = 1 + ~h_b
//   Z_TM = 1 + (k/g0) ~h_a + (xi/c)^2/g0^2 ~h_b + k (k - g0)/g0^2 ~h_c
//   H_TM = 1 / Z_TM
//
// and r = (H - 1)/(H + 1). With this orientation H_TM = eps g0 / chi for the
// drift tensor, so r_from_H reproduces the drift amplitudes with their sign.

#include <functional>

#include "driftcas/materials.hpp"
#include "driftcas/reflection.hpp"

namespace driftcas::nonlocal {

/// eps(k, q_z, xi) on the imaginary axis.
using TensorComponent = std::function<double(double k, double qz, double xi)>;

struct PermittivityTensor {
  TensorComponent eps_perp;
  TensorComponent eps_par;
  /// When false the components ignore q_z and closed-form integrals apply.
  bool qz_dependent = false;
};

enum class Method { Closed, Quadrature };

struct HFunctions {
  double h_a = 0.0, h_b = 0.0, h_c = 0.0;
  /// tilded integrals, kept separately to avoid 1 - 1 cancellation
  double ht_a = 0.0, ht_b = 0.0, ht_c = 0.0;
  double H_tm = 1.0, H_te = 1.0;
  /// H - 1 for both polarizations, accurate when H is close to 1
  double Hm1_tm = 0.0, Hm1_te = 0.0;
  double gamma0 = 0.0;
  double quad_error = 0.0;  ///< largest absolute error estimate (quadrature only)
};

/// Transverse drift permittivity eps(i xi) [1 + omega_c / (xi (1 + xi tau))].
double eps_perp_drift(double k, double xi, const MaterialState& state, double eps_bar);

/// Effective q_z-independent longitudinal permittivity that makes the
/// H-function amplitude coincide with the drift TM amplitude. Its static
/// limit is eps0 sqrt(1 + 1/(k R_D)^2).
double eps_par_drift(double k, double xi, const MaterialState& state, double eps_bar);

/// Tensor with eps_perp_drift / eps_par_drift, q_z-independent.
PermittivityTensor drift_tensor(const MaterialSpec& spec, const MaterialState& state);

/// Static Debye tensor: eps_perp = eps0, eps_par(q) = eps0 [1 + 1/(q R_D)^2]
/// with q^2 = k^2 + q_z^2 (q_z-dependent).
PermittivityTensor static_debye_tensor(const MaterialSpec& spec, const MaterialState& state);

/// Unit tensor (vacuum).
PermittivityTensor vacuum_tensor();

/// h-integrals and H-functions. Requires xi > 0; the closed method requires a
/// q_z-independent tensor. Quadrature targets rel_tol relative accuracy.
HFunctions h_integrals(const PermittivityTensor& tensor, const Mode& mode, Method method,
                       double rel_tol = 1e-12);

double H_tm(const HFunctions& hf);
double H_te(const HFunctions& hf);

/// (H - 1)/(H + 1); DomainError at the pole H = -1, 1 for H = +inf.
double r_from_H(double H);

/// Same as r_from_H but takes H - 1, which keeps accuracy for H near 1.
double r_from_H_minus_one(double Hm1);

/// Amplitudes from the H-functions of a tensor.
Amplitudes amplitudes_from_tensor(const PermittivityTensor& tensor, const Mode& mode, Method method,
                                  double rel_tol = 1e-12);

/// Drift-tensor amplitudes (closed-form route); xi == 0 uses the static branch.
Amplitudes amplitudes(const Mode& mode, const MaterialSpec& spec, const MaterialState& state);

}  // namespace driftcas::nonlocal
