#include "driftcas/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/quadrature.hpp"

namespace driftcas {

namespace {

enum class Quantity { Energy, Pressure };

struct TermValue {
  double te = 0.0;
  double tm = 0.0;
  double error = 0.0;
};

// 1 - R e^{-u} for R <= 1 without cancellation near u = 0.
double one_minus(double R, double u) {
  const double x = R * std::exp(-u);
  if (x < 0.5) return 1.0 - x;
  return (1.0 - R) * std::exp(-u) - std::expm1(-u);
}

TermValue evaluate_term(const AmplitudeSource& src, Quantity q, std::int64_t n, double d, double T,
                        const SumSettings& s) {
  const double xi = phys::matsubara_xi(n, T);
  const double xi_c = xi / phys::c;
  const double u0 = 2.0 * d * xi_c;
  const double weight = n == 0 ? 0.5 : 1.0;
  const double prefactor = q == Quantity::Energy
                               ? weight * phys::k_B * T / (8.0 * phys::pi * d * d)
                               : weight * phys::k_B * T / (8.0 * phys::pi * d * d * d);

  auto integrand = [&](Polarization p) {
    return [&, p](double u) -> double {
      const double g0 = u / (2.0 * d);
      const double k2 = (g0 - xi_c) * (g0 + xi_c);
      if (!(k2 > 0.0)) return 0.0;
      const Mode mode{xi, std::sqrt(k2)};
      const PlatePair pp = src(n, mode);
      const double R = p == Polarization::TM ? pp.plate1.tm * pp.plate2.tm
                                             : pp.plate1.te * pp.plate2.te;
      if (R == 0.0) return 0.0;
      if (q == Quantity::Energy) return u * g_from_product(R, u);
      const double om = one_minus(R, u);
      if (!(om > 0.0)) throw DomainError("pressure: r1 r2 exp(-2 d gamma0) >= 1");
      return u * u * R * std::exp(-u) / om;
    };
  };

  quad::TailOptions opt;
  opt.rel_tol = s.quad_rel_tol;
  opt.panel_width = 1.0;
  opt.stop_ratio = 1e-17;

  TermValue tv;
  const quad::Result tm = quad::integrate_damped_tail(integrand(Polarization::TM), u0, opt);
  const quad::Result te = quad::integrate_damped_tail(integrand(Polarization::TE), u0, opt);
  tv.tm = prefactor * tm.value;
  tv.te = prefactor * te.value;
  tv.error = prefactor * (tm.error + te.error);
  return tv;
}

SummationResult matsubara_sum(const AmplitudeSource& src, Quantity q, double d, double T,
                              const SumSettings& s) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("separation d must be positive");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be positive");

  SummationResult res;
  if (T > kValidityTmax) {
    res.warnings.push_back("temperature " + std::to_string(T) +
                           " K is outside the fitted material validity range (0, 400] K");
  }

  double acc = 0.0;
  int small_run = 0;
  std::int64_t next = 0;
  int batch = std::min(8, std::max(1, s.batch));

  while (next < s.max_terms) {
    const std::int64_t count = std::min<std::int64_t>(batch, s.max_terms - next);
    std::vector<TermValue> values(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        values[static_cast<std::size_t>(i)] = evaluate_term(src, q, next + i, d, T, s);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }

    // Fixed n-order reduction: the result does not depend on the worker count.
    for (std::int64_t i = 0; i < count; ++i) {
      if (errors[static_cast<std::size_t>(i)]) std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
      const TermValue& tv = values[static_cast<std::size_t>(i)];
      const std::int64_t n = next + i;
      const double term = tv.te + tv.tm;
      acc += term;
      res.per_n_terms.push_back({n, tv.te, tv.tm});
      res.quadrature_error_estimate += tv.error;
      if (std::abs(term) <= s.sum_rel_tol * std::abs(acc)) {
        ++small_run;
      } else {
        small_run = 0;
      }
      if (small_run >= 3) {
        res.value = acc;
        res.n_truncated_at = n;
        const auto& t = res.per_n_terms;
        const double t1 = std::abs(t[t.size() - 3].te + t[t.size() - 3].tm);
        const double t3 = std::abs(t.back().te + t.back().tm);
        double tail = t3;
        if (t1 > 0.0 && t3 > 0.0) {
          const double rho = std::sqrt(t3 / t1);
          tail = rho < 1.0 ? t3 * rho / (1.0 - rho) : t3 * 3.0;
        }
        res.truncation_error_estimate = tail;
        return res;
      }
    }
    next += count;
    batch = std::min(batch * 2, std::max(1, s.batch));
  }
  throw ConvergenceError("Matsubara sum did not converge within " + std::to_string(s.max_terms) +
                             " terms; raise T or reduce d",
                         acc, next);
}

}  // namespace

void Geometry::validate() const {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("geometry: d must be positive");
  plate1.material.validate();
  plate2.material.validate();
}

Geometry identical_plates(const MaterialSpec& spec, const ReflectionModel& model, double d) {
  return Geometry{d, Plate{spec, model}, Plate{spec, model}};
}

AmplitudeSource geometry_source(const Geometry& geom, double T) {
  geom.validate();
  const Plate p1 = geom.plate1;
  const Plate p2 = geom.plate2;
  const MaterialState s1 = material_state(p1.material, T);
  const MaterialState s2 = material_state(p2.material, T);
  if (p1 == p2) {
    return [p1, s1](std::int64_t, const Mode& mode) {
      const Amplitudes a = amplitudes(p1.model, mode, p1.material, s1);
      return PlatePair{a, a};
    };
  }
  return [p1, p2, s1, s2](std::int64_t, const Mode& mode) {
    return PlatePair{amplitudes(p1.model, mode, p1.material, s1),
                     amplitudes(p2.model, mode, p2.material, s2)};
  };
}

AmplitudeSource bare_source(const Geometry& geom, double T) {
  Geometry g = geom;
  g.plate1.model = model::Bare{};
  g.plate2.model = model::Bare{};
  return geometry_source(g, T);
}

AmplitudeSource perfect_static_tm_source(const Geometry& geom, double T) {
  AmplitudeSource bare = bare_source(geom, T);
  return [bare](std::int64_t n, const Mode& mode) {
    PlatePair pp = bare(n, mode);
    if (n == 0) {
      pp.plate1.tm = 1.0;
      pp.plate2.tm = 1.0;
    }
    return pp;
  };
}

double g_from_product(double r1r2, double u) {
  const double x = r1r2 * std::exp(-u);
  if (x >= 1.0) throw DomainError("g: r1 r2 exp(-2 d gamma0) >= 1");
  if (x < 0.5) return std::log1p(-x);
  return std::log(one_minus(r1r2, u));
}

double g_mode(Polarization p, const Mode& mode, const Geometry& geom, double T) {
  mode.validate();
  const PlatePair pp = geometry_source(geom, T)(0, mode);
  const double R = p == Polarization::TM ? pp.plate1.tm * pp.plate2.tm : pp.plate1.te * pp.plate2.te;
  return g_from_product(R, 2.0 * geom.d * mode.gamma0());
}

SummationResult free_energy_per_area(const AmplitudeSource& src, double d, double T,
                                     const SumSettings& s) {
  return matsubara_sum(src, Quantity::Energy, d, T, s);
}

SummationResult pressure(const AmplitudeSource& src, double d, double T, const SumSettings& s) {
  return matsubara_sum(src, Quantity::Pressure, d, T, s);
}

SummationResult free_energy_per_area(const Geometry& geom, double T, const SumSettings& s) {
  return free_energy_per_area(geometry_source(geom, T), geom.d, T, s);
}

SummationResult pressure(const Geometry& geom, double T, const SumSettings& s) {
  return pressure(geometry_source(geom, T), geom.d, T, s);
}

double ratio_to_bare(const Geometry& geom, double T, const SumSettings& s) {
  const double e_model = free_energy_per_area(geom, T, s).value;
  const double e_bare = free_energy_per_area(bare_source(geom, T), geom.d, T, s).value;
  if (std::abs(e_bare) < 1e-30) {
    throw DomainError("ratio_to_bare: bare free energy below normalization floor 1e-30 erg/cm^2");
  }
  return e_model / e_bare;
}

}  // namespace driftcas
