// Reflection amplitudes from a direct numerical solve of the interface
// boundary-value problem. Independent of the closed forms in reflection.cpp;
// used as their test oracle.
//
// Conventions on the imaginary axis (omega = i xi, vacuum on z > 0): the
// vacuum field is an incident/reflected pair with decay gamma0, the medium
// carries a transverse branch (eta_T) and a longitudinal branch (eta_L). All
// amplitudes are rescaled so that the systems are real.

#include <Eigen/Dense>
#include <cmath>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/reflection.hpp"

namespace driftcas {

namespace {

template <int N>
Eigen::Matrix<double, N, 1> solve_or_throw(const Eigen::Matrix<double, N, N>& A,
                                           const Eigen::Matrix<double, N, 1>& b, const Mode& mode) {
  Eigen::FullPivLU<Eigen::Matrix<double, N, N>> lu(A);
  if (!lu.isInvertible()) {
    throw EvaluationError("boundary-condition oracle: singular linear system", mode.k, mode.xi);
  }
  return lu.solve(b);
}

}  // namespace

BoundarySolution r_oracle_bc(const Mode& mode, double etaL, double etaT, double eps_bar) {
  mode.validate();
  if (!(mode.xi > 0.0)) throw DomainError("r_oracle_bc: xi must be > 0");

  const double k = mode.k;
  const double g0 = mode.gamma0();
  const double a = (mode.xi / phys::c) * (mode.xi / phys::c);
  // Transverse response of the medium, read off from its dispersion relation.
  const double eps_perp = (etaT - k) * (etaT + k) / a;

  // TM unknowns: (r, a_T, a_L, h) with h the rescaled H_y just inside the medium.
  Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
  Eigen::Vector4d b;
  // E_x continuity
  A(0, 0) = g0 / k;
  A(0, 1) = 1.0;
  A(0, 2) = 1.0;
  b(0) = g0 / k;
  // H_y continuity
  A(1, 0) = 1.0;
  A(1, 3) = 1.0;
  b(1) = -1.0;
  // Faraday's law for the transverse branch; the longitudinal branch is curl-free.
  A(2, 1) = eps_perp * k / etaT;
  A(2, 3) = 1.0;
  b(2) = 0.0;
  // continuity of eps E_z
  A(3, 0) = 1.0;
  A(3, 1) = -eps_bar * k / etaT;
  A(3, 2) = -eps_bar * etaL / k;
  b(3) = -1.0;
  const Eigen::Vector4d tm = solve_or_throw<4>(A, b, mode);

  // TE unknowns: (r, B). E_y and H_x continuity.
  Eigen::Matrix2d Ate;
  Eigen::Vector2d bte;
  Ate << 1.0, -1.0, g0, etaT;
  bte << -1.0, g0;
  const Eigen::Vector2d te = solve_or_throw<2>(Ate, bte, mode);

  BoundarySolution out;
  out.r_tm = tm(0);
  out.tm_transverse = tm(1);
  out.tm_longitudinal = tm(2);
  out.r_te = te(0);
  out.te_transverse = te(1);
  // The vacuum TE wave has no E_x component, so E_x continuity alone fixes
  // the longitudinal amplitude: 1 * A = 0.
  out.te_longitudinal = 0.0;
  return out;
}

}  // namespace driftcas
