#include "driftcas/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"

namespace driftcas {

double default_fd_step(double T) { return std::max(T / 20.0, 0.25); }

EntropyPoint entropy(const SourceFactory& make_source, double d, double T, double fd_step,
                     const SumSettings& s) {
  const double h = fd_step > 0.0 ? fd_step : default_fd_step(T);
  if (!(T - 2.0 * h > 0.0)) {
    throw DomainError("entropy: T - 2 * fd_step must be positive (T=" + std::to_string(T) +
                      ", step=" + std::to_string(h) + ")");
  }
  auto E = [&](double t) { return free_energy_per_area(make_source(t), d, t, s).value; };

  const double d_h = (E(T + h) - E(T - h)) / (2.0 * h);
  const double d_h2 = (E(T + 0.5 * h) - E(T - 0.5 * h)) / h;

  EntropyPoint pt;
  pt.T = T;
  pt.fd_step = h;
  pt.S = -(4.0 * d_h2 - d_h) / 3.0;
  pt.richardson_error = std::abs(d_h2 - d_h) / 3.0;
  if (pt.richardson_error > std::abs(pt.S)) {
    pt.warnings.push_back("entropy at T=" + std::to_string(T) +
                          " K: Richardson error estimate exceeds |S|");
  }
  if (T + h > kValidityTmax) {
    pt.warnings.push_back("entropy stencil reaches outside the fitted validity range");
  }
  return pt;
}

EntropyPoint entropy(const Geometry& geom, double T, double fd_step, const SumSettings& s) {
  geom.validate();
  const Geometry g = geom;
  return entropy([g](double t) { return geometry_source(g, t); }, g.d, T, fd_step, s);
}

GProbe g_probe(Polarization p, double k, const Geometry& geom, double T) {
  if (!(k > 0.0)) throw DomainError("g_probe: k must be positive");
  geom.validate();
  const AmplitudeSource src = geometry_source(geom, T);
  GProbe out;
  out.p = p;
  out.k = k;
  out.theta = phys::matsubara_xi(1, T);
  const double h = 1e-4 * out.theta;

  double g[4];
  for (int i = 0; i < 4; ++i) {
    const Mode mode{i * h, k};
    const PlatePair pp = src(0, mode);
    const double R = p == Polarization::TM ? pp.plate1.tm * pp.plate2.tm
                                           : pp.plate1.te * pp.plate2.te;
    g[i] = g_from_product(R, 2.0 * geom.d * mode.gamma0());
  }
  out.g0 = g[0];
  // cubic through the four points, compared against the quadratic through
  // the first three for the error estimate
  out.g_xi = (-11.0 * g[0] + 18.0 * g[1] - 9.0 * g[2] + 2.0 * g[3]) / (6.0 * h);
  out.g_xixi = (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / (h * h);
  const double d1_low = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
  const double d2_low = (g[0] - 2.0 * g[1] + g[2]) / (h * h);
  out.g_xi_error = std::abs(out.g_xi - d1_low);
  out.g_xixi_error = std::abs(out.g_xixi - d2_low);
  if (!std::isfinite(out.g_xi) || !std::isfinite(out.g_xixi)) {
    throw EvaluationError("g_probe: stencil produced non-finite derivatives", k, h);
  }
  return out;
}

NernstReport nernst_sweep(const Geometry& geom, const std::vector<double>& temperatures,
                          const SumSettings& s) {
  if (temperatures.empty()) throw DomainError("nernst_sweep: empty temperature list");
  NernstReport rep;
  for (double T : temperatures) {
    if (!(T > 0.0) || T > kValidityTmax) {
      throw DomainError("nernst_sweep: T=" + std::to_string(T) + " K outside (0, 400] K");
    }
    rep.points.push_back(entropy(geom, T, 0.0, s));
  }

  std::vector<const EntropyPoint*> low;
  for (const auto& pt : rep.points) {
    if (pt.T <= 75.0) low.push_back(&pt);
  }
  std::sort(low.begin(), low.end(), [](auto* a, auto* b) { return a->T > b->T; });
  rep.low_T_monotone = low.size() >= 2;
  for (std::size_t i = 1; i < low.size(); ++i) {
    if (!(std::abs(low[i]->S) < std::abs(low[i - 1]->S))) {
      rep.low_T_monotone = false;
      rep.diagnostics.push_back("|S| not decreasing between T=" + std::to_string(low[i - 1]->T) +
                                " K and T=" + std::to_string(low[i]->T) + " K");
    }
  }

  const auto [lo, hi] = std::minmax_element(
      rep.points.begin(), rep.points.end(), [](const auto& a, const auto& b) { return a.T < b.T; });
  rep.low_to_high_ratio = std::abs(hi->S) > 0.0 ? std::abs(lo->S) / std::abs(hi->S) : 0.0;

  for (const auto& pt : rep.points) {
    if (pt.S < 0.0) {
      rep.diagnostics.push_back("negative entropy at T=" + std::to_string(pt.T) + " K");
    }
    for (const auto& w : pt.warnings) rep.diagnostics.push_back(w);
  }
  return rep;
}

}  // namespace driftcas
