#include "driftcas/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <string>

#include "driftcas/errors.hpp"
#include "driftcas/phys.hpp"

namespace driftcas::quad {

namespace {

std::string interval(double a, double b) {
  std::ostringstream os;
  os.precision(6);
  os << "[" << a << ", " << b << "]";
  return os.str();
}

std::string number(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, double rel_tol, double abs_floor,
                 unsigned max_depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  struct Panel {
    double a, b, value, error, l1;
    unsigned depth;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  Result r;
  auto counted = [&](double x) {
    ++r.evaluations;
    return f(x);
  };
  // Boost's error output for a single rule is not scaled by the half-width.
  auto rule = [&](double lo, double hi, unsigned depth) {
    double err = 0.0;
    double l1 = 0.0;
    const double v = GK::integrate(counted, lo, hi, 0, 0.0, &err, &l1);
    return Panel{lo, hi, v, err * 0.5 * std::abs(hi - lo), l1, depth};
  };

  std::priority_queue<Panel> panels;
  panels.push(rule(a, b, 0));
  double value = panels.top().value;
  double error = panels.top().error;
  double l1 = panels.top().l1;
  const std::size_t max_panels = 4096;
  auto allowed = [&] { return std::max({rel_tol * std::abs(value), rel_tol * l1, abs_floor}); };
  while (error > allowed() && panels.size() < max_panels && std::isfinite(value)) {
    const Panel worst = panels.top();
    if (worst.depth >= max_depth) break;
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = rule(worst.a, mid, worst.depth + 1);
    const Panel right = rule(mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running totals.
  value = error = l1 = 0.0;
  for (; !panels.empty(); panels.pop()) {
    value += panels.top().value;
    error += panels.top().error;
    l1 += panels.top().l1;
  }
  r.value = value;
  r.error = error;
  if (!std::isfinite(r.value)) {
    throw IntegrationError("quadrature: non-finite integral on " + interval(a, b), r.value, error);
  }
  if (error > 10.0 * allowed() && error > 0.0) {
    throw IntegrationError("quadrature: tolerance not reached on " + interval(a, b) +
                               ", error estimate " + number(error),
                           r.value, error);
  }
  return r;
}

Result integrate_half_line(const Integrand& f, double scale, double rel_tol, double abs_floor) {
  return integrate_from(f, 0.0, scale, rel_tol, abs_floor);
}

Result integrate_from(const Integrand& f, double x0, double scale, double rel_tol,
                      double abs_floor) {
  if (!(scale > 0.0)) throw DomainError("integrate_from: scale must be positive");
  auto mapped = [&](double t) {
    const double c = std::cos(t);
    if (c <= 0.0) return 0.0;
    const double x = x0 + scale * std::tan(t);
    return f(x) * scale / (c * c);
  };
  return integrate(mapped, 0.0, 0.5 * phys::pi, rel_tol, abs_floor);
}

Result integrate_multiscale(const Integrand& f, double s1, double s2, double rel_tol,
                            double abs_floor) {
  if (!(s1 > 0.0) || !(s2 > 0.0)) throw DomainError("integrate_multiscale: scales must be positive");
  const double lo = std::min(s1, s2);
  const double hi = std::max(s1, s2);
  Result total = integrate(f, 0.0, lo, rel_tol, abs_floor);
  auto add = [&total](const Result& r) {
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
  };
  for (double a = lo; a < hi;) {
    const double b = std::min(10.0 * a, hi);
    add(integrate(f, a, b, rel_tol, abs_floor));
    a = b;
  }
  add(integrate_from(f, hi, hi, rel_tol, abs_floor));
  return total;
}

Result integrate_damped_tail(const Integrand& f, double u0, const TailOptions& opt) {
  Result total;
  int negligible = 0;
  for (int p = 0; p < opt.max_panels; ++p) {
    const double a = u0 + p * opt.panel_width;
    const double b = a + opt.panel_width;
    const Result panel = integrate(f, a, b, opt.rel_tol, opt.rel_tol * std::abs(total.value) * 1e-3);
    total.value += panel.value;
    total.error += panel.error;
    total.evaluations += panel.evaluations;
    if (std::abs(panel.value) <= opt.stop_ratio * std::abs(total.value)) {
      if (++negligible >= 2) return total;
    } else {
      negligible = 0;
    }
    if (total.value == 0.0 && panel.value == 0.0 && p >= 2) return total;
  }
  throw IntegrationError("damped-tail quadrature: panel limit reached", total.value, total.error);
}

}  // namespace driftcas::quad
