#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/reflection.hpp"
#include "oracles.hpp"

using namespace driftcas;
using oracle::rel;

namespace {

double d(const oracle::mp& x) { return static_cast<double>(x); }

MaterialState carrier_free(const MaterialSpec& spec, double T) {
  MaterialState s = material_state(spec, T);
  s.n0 = 0.0;
  s.sigma0 = 0.0;
  s.kappa = 0.0;
  s.R_D = std::numeric_limits<double>::infinity();
  return s;
}

const double xi1 = phys::matsubara_xi(1, 300.0);

}  // namespace

TEST_SUITE("reflection") {
  TEST_CASE("mode validation") {
    CHECK(Mode{0.0, 3.0}.gamma0() == 3.0);
    CHECK_THROWS_AS(Mode({-1.0, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS(Mode({1.0, 0.0}).validate(), DomainError);
    CHECK(model_name(model::Conductivity{1.0}) == "cond");
    CHECK(to_string(Polarization::TE) == "TE");
  }

  TEST_CASE("drift quantities against the 50-digit oracle") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    for (double k : {1e2, 1e4, 1e6}) {
      for (double f : {1e-2, 1.0, 1e2}) {
        const Mode m{f * xi1, k};
        const auto o = oracle::drift(oracle::ge(), 300, m.xi, k);
        const double eps = bare_eps(spec, m.xi);
        CHECK(rel(eta_L(m, st, eps), d(o.etaL)) < 1e-13);
        CHECK(rel(eta_T(m, st, eps), d(o.etaT)) < 1e-13);
        const auto q = drift_quantities(m, st, eps);
        CHECK(rel(q.chi, d(o.chi)) < 1e-12);
        const auto a = amplitudes(model::Drift{}, m, spec, st);
        CHECK(rel(a.tm, d(o.rtm)) < 1e-12);
        CHECK(rel(a.te, d(o.rte)) < 1e-12);
      }
    }
  }

  TEST_CASE("printed chi agrees with the stable form where well conditioned") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    const Mode m{xi1, 1e4};
    const double eps = bare_eps(spec, m.xi);
    const auto q = drift_quantities(m, st, eps);
    CHECK(rel(chi(m, q.eta_L, q.eta_T, eps), q.chi) < 1e-10);
    CHECK(q.eta_L >= m.k);
    CHECK(q.eta_T >= m.k);
    CHECK(q.chi > 0.0);
    CHECK(rel(q.eta_T * q.eta_T, m.k * m.k + q.eps_perp * std::pow(m.xi / phys::c, 2)) < 1e-12);
  }

  TEST_CASE("static limits") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    const Mode m0{0.0, 1e4};
    CHECK(rel(eta_L(m0, st, spec.permittivity.eps0), std::hypot(1e4, st.kappa)) < 1e-14);
    CHECK(eta_T(m0, st, spec.permittivity.eps0) == 1e4);
    CHECK(rel(chi(m0, std::hypot(1e4, st.kappa), 1e4, 16.2), 1e8 / std::hypot(1e4, st.kappa)) < 1e-14);
    CHECK_THROWS_AS(chi(Mode{1.0, 1e4}, 2e4, 1e4, 16.2), EvaluationError);
    for (const ReflectionModel& mod : {ReflectionModel{model::Bare{}}, ReflectionModel{model::Conductivity{1e10}},
                                       ReflectionModel{model::Drift{}}, ReflectionModel{model::Nonlocal{}}}) {
      CHECK(amplitudes(mod, m0, spec, st).te == 0.0);
    }
    const double s2 = std::sqrt(2.0);
    CHECK(rel(amplitudes(model::Drift{}, Mode{0.0, st.kappa}, spec, st).tm,
              (16.2 * s2 - 1) / (16.2 * s2 + 1)) < 1e-14);
    CHECK(amplitudes(model::Conductivity{1e10}, m0, spec, st).tm == 1.0);
    CHECK(rel(amplitudes(model::Bare{}, m0, spec, st).tm, 15.2 / 17.2) < 1e-15);
  }

  TEST_CASE("drift TM approaches the static value linearly in xi") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    for (double k = 1e2; k <= 1e6 * 1.001; k *= 10.0) {
      const double r0 = drift_tm_static(k, st.kappa, 16.2);
      auto err = [&](double xi) { return std::abs(amplitudes(model::Drift{}, Mode{xi, k}, spec, st).tm - r0); };
      CHECK(err(1e-11 * xi1) / std::abs(r0) < 1e-8);
      CHECK(err(1e-5 * xi1) / err(1e-7 * xi1) == doctest::Approx(100.0).epsilon(0.02));
    }
  }

  TEST_CASE("static drift TM: perfect-conductor limit and monotonicity") {
    const double kappa = 1.3e4;
    CHECK(drift_tm_static(1e-5 * kappa, kappa, 16.2) > 0.9999);
    double prev = 1.0;
    for (double k = 1e1; k < 1e8; k *= 1.5) {
      const double r = drift_tm_static(k, kappa, 16.2);
      CHECK(r < prev);
      prev = r;
    }
  }

  TEST_CASE("carrier-free drift equals bare Fresnel") {
    const auto spec = germanium();
    const auto st = carrier_free(spec, 300.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const Mode m{xi1 * std::pow(10.0, -3.0 + 6.0 * i / 19.0), std::pow(10.0, 2.0 + 4.0 * j / 19.0)};
        const auto dr = amplitudes(model::Drift{}, m, spec, st);
        const auto br = amplitudes(model::Bare{}, m, spec, st);
        worst = std::max({worst, rel(dr.tm, br.tm), rel(dr.te, br.te)});
        const auto q = drift_quantities(m, st, bare_eps(spec, m.xi));
        CHECK(rel(q.chi, q.eta_T) < 1e-12);
      }
    }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("bare Fresnel forms") {
    const Mode m{xi1, 3e4};
    CHECK(fresnel_tm(m, 1.0) == 0.0);
    CHECK(fresnel_te(m, 1.0) == 0.0);
    const double a = std::pow(m.xi / phys::c, 2);
    const double eps = 7.0;
    const double g0 = m.gamma0();
    const double eta = std::sqrt(m.k * m.k + eps * a);
    CHECK(rel(fresnel_tm(m, eps), (eps * g0 - eta) / (eps * g0 + eta)) < 1e-12);
    CHECK(rel(fresnel_te(m, eps), (g0 - eta) / (g0 + eta)) < 1e-12);
  }

  TEST_CASE("drift TE equals Fresnel TE with the transverse response") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    const Mode m{xi1, 1e4};
    const auto q = drift_quantities(m, st, bare_eps(spec, m.xi));
    const double te = amplitudes(model::Drift{}, m, spec, st).te;
    CHECK(te < 0.0);
    CHECK(rel(te, fresnel_te(m, q.eps_perp)) < 1e-13);
  }

  TEST_CASE("boundary-condition oracle") {
    const auto spec = germanium();
    const auto st = material_state(spec, 300.0);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
      const Mode m{xi1 * std::pow(10.0, -1.0 + 4.0 * u(rng)), std::pow(10.0, 2.0 + 4.0 * u(rng))};
      const double eps = bare_eps(spec, m.xi);
      const auto q = drift_quantities(m, st, eps);
      const auto bc = r_oracle_bc(m, q.eta_L, q.eta_T, eps);
      const auto a = amplitudes(model::Drift{}, m, spec, st);
      CHECK(rel(bc.r_tm, a.tm) < 1e-9);
      CHECK(rel(bc.r_te, a.te) < 1e-9);
      CHECK(bc.te_longitudinal == 0.0);
    }
    // carrier-free medium: textbook Fresnel for both polarizations
    const auto free = carrier_free(spec, 300.0);
    const Mode m{10 * xi1, 5e3};
    const double eps = bare_eps(spec, m.xi);
    const auto q = drift_quantities(m, free, eps);
    const auto bc = r_oracle_bc(m, q.eta_L, q.eta_T, eps);
    CHECK(rel(bc.r_tm, fresnel_tm(m, eps)) < 1e-9);
    CHECK(rel(bc.r_te, fresnel_te(m, eps)) < 1e-9);
  }

  TEST_CASE("passivity") {
    for (const auto& spec : {germanium(), silicon()}) {
      const auto st = material_state(spec, 300.0);
      for (const ReflectionModel& mod :
           {ReflectionModel{model::Bare{}}, ReflectionModel{model::Conductivity{*spec.reference_sigma0}},
            ReflectionModel{model::Drift{}}, ReflectionModel{model::Nonlocal{}}}) {
        for (double f = 1e-4; f < 1e4; f *= 10) {
          for (double k = 1e1; k < 1e8; k *= 10) {
            const auto a = amplitudes(mod, Mode{f * xi1, k}, spec, st);
            CHECK(a.tm > -1.0);
            CHECK(a.tm <= 1.0);
            CHECK(a.te > -1.0);
            CHECK(a.te <= 1.0);
          }
        }
      }
    }
  }

  TEST_CASE("temperature entry points") {
    const auto spec = silicon();
    const Mode m{xi1, 1e4};
    const auto a = amplitudes(model::Drift{}, m, spec, material_state(spec, 300.0));
    CHECK(r_tm(model::Drift{}, m, spec, 300.0) == a.tm);
    CHECK(r_te(model::Drift{}, m, spec, 300.0) == a.te);
  }
}
