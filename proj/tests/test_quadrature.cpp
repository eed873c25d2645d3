#include <doctest.h>

#include <cmath>

#include "driftcas/errors.hpp"
#include "driftcas/quadrature.hpp"
#include "oracles.hpp"

using namespace driftcas;
using oracle::rel;

TEST_SUITE("quadrature") {
  TEST_CASE("finite interval") {
    const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    CHECK(rel(r.value, 2.0) < 1e-13);
    CHECK(r.error < 1e-10);
    CHECK(r.evaluations > 0);
  }

  TEST_CASE("half line and multiscale") {
    const auto r = quad::integrate_half_line([](double x) { return 1.0 / (1.0 + x * x); }, 1.0, 1e-12);
    CHECK(rel(r.value, M_PI / 2) < 1e-13);
    // two Lorentzian widths five decades apart
    auto f = [](double x) { return 1.0 / (x * x + 1e-10) + 1.0 / (x * x + 1.0); };
    const auto m = quad::integrate_multiscale(f, 1e-5, 1.0, 1e-12);
    CHECK(rel(m.value, M_PI / 2 * (1e5 + 1.0)) < 1e-11);
    const auto t = quad::integrate_from([](double x) { return std::exp(-x); }, 2.0, 1.0, 1e-12);
    CHECK(rel(t.value, std::exp(-2.0)) < 1e-12);
  }

  TEST_CASE("failures raise integration errors") {
    CHECK_THROWS_AS(quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10),
                    IntegrationError);
    CHECK_THROWS_AS(quad::integrate_half_line([](double) { return 1.0; }, -1.0, 1e-10), DomainError);
    quad::TailOptions opt;
    opt.max_panels = 5;
    CHECK_THROWS_AS(quad::integrate_damped_tail([](double) { return 1.0; }, 0.0, opt), IntegrationError);
  }

  TEST_CASE("zeta(3) by brute force before trusting the closed value") {
    // int_0^inf u ln(1 - e^{-u}) du = -zeta(3): series, Simpson and the panel integrator
    const double series = oracle::zeta3_series();
    CHECK(rel(series, oracle::zeta3) < 1e-12);
    auto f = [](double u) { return u == 0.0 ? 0.0 : u * std::log1p(-std::exp(-u)); };
    // u ln u is not smooth at 0; split off [0, 1e-3] where the integrand is ~ u ln u
    const double head = 1e-6 * (std::log(1e-3) - 0.5) / 2.0;
    const double simpson = head + oracle::simpson(f, 1e-3, 60.0, 2'000'000);
    CHECK(rel(simpson, -oracle::zeta3) < 1e-7);
    quad::TailOptions opt;
    opt.rel_tol = 1e-12;
    opt.stop_ratio = 1e-17;
    const auto r = quad::integrate_damped_tail(f, 0.0, opt);
    CHECK(rel(r.value, -oracle::zeta3) < 1e-12);
  }
}
