// Acceptance suite: one PASS/FAIL line per criterion.
//
//   driftcas_acceptance            run all criteria
//   driftcas_acceptance 3 8        run the listed criteria only
//
// Exit status is 0 only when every selected criterion passes.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "driftcas/cli.hpp"
#include "driftcas/lifshitz.hpp"
#include "driftcas/nonlocal.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/reflection.hpp"
#include "driftcas/thermo.hpp"

using namespace driftcas;

namespace {

namespace tol {
constexpr double gap = 0.005;
constexpr double tau_ge = 0.02;
constexpr double nc_ge = 0.02;
constexpr double tau_si = 0.05;
constexpr double rd_ge_lo = 0.55, rd_ge_hi = 0.85;
constexpr double rd_si_lo = 16.0, rd_si_hi = 36.0;
constexpr double static_limit = 1e-8;
constexpr double dielectric = 1e-10;
constexpr double bc_oracle = 1e-9;
constexpr double nonlocal_equiv = 1e-8;
constexpr double nonlocal_quad = 1e-8;
constexpr double zeta_term = 1e-8;
constexpr double fd_pressure = 1e-5;
constexpr double si_ratio = 1e-3;
constexpr double ge_ratio_min = 1.01;
constexpr double asymptote = 0.05;
constexpr double cond_converge = 0.02;
constexpr double single_mode = 1e-3;
constexpr double nernst_ratio = 0.05;
}  // namespace tol

constexpr double zeta3 = 1.2020569031595942854;
const double xi1 = phys::matsubara_xi(1, 300.0);

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(fmt::format("{}{}", ok ? "" : "[x] ", note));
  }
};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

bool within(double value, double target, double frac) { return std::abs(value - target) <= frac * std::abs(target); }

MaterialState carrier_free(const MaterialSpec& spec, double T) {
  MaterialState s = material_state(spec, T);
  s.n0 = 0.0;
  s.sigma0 = 0.0;
  s.kappa = 0.0;
  s.R_D = std::numeric_limits<double>::infinity();
  return s;
}

std::vector<Mode> log_grid(int nk, int nxi, double xi_lo, double xi_hi) {
  std::vector<Mode> g;
  for (int i = 0; i < nxi; ++i) {
    for (int j = 0; j < nk; ++j) {
      const double xi = xi_lo * std::pow(xi_hi / xi_lo, static_cast<double>(i) / (nxi - 1));
      const double k = 1e2 * std::pow(1e4, static_cast<double>(j) / (nk - 1));
      g.push_back({xi, k});
    }
  }
  return g;
}

Verdict c1_material_anchors() {
  Verdict v;
  const auto ge = germanium();
  const auto si = silicon();
  const double eg_ge = phys::erg_to_eV(band_gap(ge, 300.0));
  const double tau_ge = phys::s_to_ps(relaxation_time(ge, 300.0));
  const double nc_ge = conduction_dos(ge, 300.0);
  const double eg_si = phys::erg_to_eV(band_gap(si, 300.0));
  const double tau_si = phys::s_to_ps(relaxation_time(si, 300.0));
  v.check(within(eg_ge, 0.66, tol::gap), fmt::format("Ge E_g={:.4f} eV (0.66 +-0.5%)", eg_ge));
  v.check(within(tau_ge, 3.9, tol::tau_ge), fmt::format("Ge tau={:.4f} ps (3.9 +-2%)", tau_ge));
  v.check(within(nc_ge, 1.0e19, tol::nc_ge), fmt::format("Ge n_c={:.4e} cm^-3 (1.0e19 +-2%)", nc_ge));
  v.check(within(eg_si, 1.12, tol::gap), fmt::format("Si E_g={:.4f} eV (1.12 +-0.5%)", eg_si));
  v.check(within(tau_si, 0.5, tol::tau_si), fmt::format("Si tau={:.4f} ps (0.5 +-5%)", tau_si));
  return v;
}

Verdict c2_debye_radii() {
  Verdict v;
  const double ge = phys::cm_to_um(material_state(germanium(), 300.0).R_D);
  const double si = phys::cm_to_um(material_state(silicon(), 300.0).R_D);
  v.check(ge >= tol::rd_ge_lo && ge <= tol::rd_ge_hi, fmt::format("Ge R_D={:.4f} um in [0.55, 0.85]", ge));
  v.check(si >= tol::rd_si_lo && si <= tol::rd_si_hi, fmt::format("Si R_D={:.3f} um in [16, 36]", si));
  return v;
}

Verdict c3_static_limits() {
  Verdict v;
  bool te_zero = true;
  for (const auto& spec : {germanium(), silicon()}) {
    const auto st = material_state(spec, 300.0);
    for (const ReflectionModel& m : {ReflectionModel{model::Bare{}}, ReflectionModel{model::Conductivity{1e10}},
                                     ReflectionModel{model::Drift{}}, ReflectionModel{model::Nonlocal{}}}) {
      for (double k = 1e2; k <= 1e6 * 1.001; k *= std::sqrt(10.0)) {
        te_zero = te_zero && amplitudes(m, Mode{0.0, k}, spec, st).te == 0.0;
      }
    }
  }
  v.check(te_zero, "r_TE(xi=0) == 0 exactly (4 models x Ge, Si x k grid)");

  const auto spec = germanium();
  const auto st = material_state(spec, 300.0);
  auto worst_at = [&](double xi) {
    double w = 0.0;
    for (double k = 1e2; k <= 1e6 * 1.001; k *= std::pow(10.0, 0.25)) {
      const double r0 = drift_tm_static(k, st.kappa, spec.permittivity.eps0);
      w = std::max(w, rel(amplitudes(model::Drift{}, Mode{xi, k}, spec, st).tm, r0));
    }
    return w;
  };
  std::string path;
  for (int m = 3; m <= 6; ++m) path += fmt::format(" 1e-{}:{:.1e}", m, worst_at(std::pow(10.0, -m) * xi1));
  const double w12 = worst_at(1e-12 * xi1);
  const double w10 = worst_at(1e-10 * xi1);
  v.check(w12 <= tol::static_limit,
          fmt::format("Ge drift r_TM at xi=1e-12 xi_1: max rel mismatch {:.2e} (<=1e-8)", w12));
  v.check(std::abs(w10 / w12 - 100.0) < 2.0, fmt::format("linear approach: mismatch ratio 1e-10/1e-12 = {:.2f}", w10 / w12));
  v.notes.push_back("approach along xi=10^-m xi_1 (informational):" + path);
  return v;
}

Verdict c4_dielectric_reduction() {
  Verdict v;
  for (const auto& spec : {germanium(), silicon()}) {
    const auto st = carrier_free(spec, 300.0);
    double worst = 0.0;
    for (const Mode& m : log_grid(20, 20, 1e-3 * xi1, 1e3 * xi1)) {
      const auto d = amplitudes(model::Drift{}, m, spec, st);
      const auto b = amplitudes(model::Bare{}, m, spec, st);
      worst = std::max({worst, rel(d.tm, b.tm), rel(d.te, b.te)});
    }
    v.check(worst <= tol::dielectric, fmt::format("{} n0=0: max rel |drift-bare| {:.2e} (<=1e-10)", spec.name, worst));
  }
  return v;
}

Verdict c5_bc_oracle() {
  Verdict v;
  std::mt19937_64 rng(5489);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto& spec = i % 2 ? silicon() : germanium();
    const auto st = material_state(spec, 300.0);
    const Mode m{xi1 * std::pow(10.0, -1.0 + 4.0 * u(rng)), std::pow(10.0, 2.0 + 4.0 * u(rng))};
    const double eps = bare_eps(spec, m.xi);
    const auto q = drift_quantities(m, st, eps);
    const auto bc = r_oracle_bc(m, q.eta_L, q.eta_T, eps);
    const auto a = amplitudes(model::Drift{}, m, spec, st);
    worst = std::max({worst, rel(bc.r_tm, a.tm), rel(bc.r_te, a.te)});
  }
  v.check(worst <= tol::bc_oracle, fmt::format("50 random modes: max rel diff {:.2e} (<=1e-9)", worst));
  return v;
}

Verdict c6_nonlocal() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = germanium();
  const auto st = material_state(spec, 300.0);
  const auto tensor = nonlocal::drift_tensor(spec, st);
  double equiv = 0.0, quad = 0.0;
  for (const Mode& m : log_grid(20, 20, 1e-3 * xi1, 1e3 * xi1)) {
    const auto a = amplitudes(model::Drift{}, m, spec, st);
    const auto b = nonlocal::amplitudes_from_tensor(tensor, m, nonlocal::Method::Closed);
    equiv = std::max({equiv, rel(a.tm, b.tm), rel(a.te, b.te)});
    const auto c = nonlocal::h_integrals(tensor, m, nonlocal::Method::Closed);
    const auto q = nonlocal::h_integrals(tensor, m, nonlocal::Method::Quadrature);
    quad = std::max({quad, rel(c.h_a, q.h_a), rel(c.h_b, q.h_b), rel(c.h_c, q.h_c)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.check(equiv <= tol::nonlocal_equiv, fmt::format("r_from_H vs drift, 20x20 grid: {:.2e} (<=1e-8)", equiv));
  v.check(quad <= tol::nonlocal_quad, fmt::format("h-integrals quadrature vs closed: {:.2e} (<=1e-8)", quad));
  v.check(secs < 60.0, fmt::format("runtime {:.2f} s (<60 s)", secs));
  return v;
}

Verdict c7_lifshitz_engine() {
  Verdict v;
  const double d = 1e-4, T = 300.0;
  AmplitudeSource ideal = [](std::int64_t n, const Mode&) {
    const Amplitudes a{n == 0 ? 1.0 : 0.0, 0.0};
    return PlatePair{a, a};
  };
  const double e = free_energy_per_area(ideal, d, T).value;
  const double exact = -phys::k_B * T * zeta3 / (16.0 * phys::pi * d * d);
  v.check(rel(e, exact) <= tol::zeta_term, fmt::format("ideal-metal n=0 TM term rel err {:.2e} (<=1e-8)", rel(e, exact)));
  const Geometry g = identical_plates(germanium(), model::Drift{}, d);
  Geometry gp = g, gm = g;
  gp.d = d * 1.001;
  gm.d = d * 0.999;
  const double fd = (free_energy_per_area(gp, T).value - free_energy_per_area(gm, T).value) / (0.002 * d);
  const double p = pressure(g, T).value;
  v.check(rel(p, fd) <= tol::fd_pressure, fmt::format("Ge drift 1 um: pressure vs dE/dd rel {:.2e} (<=1e-5)", rel(p, fd)));
  return v;
}

std::string fig1_csv() {
  cli::RunConfig cfg;
  cfg.command = "fig1";
  cfg.materials = {"Ge", "Si"};
  cfg.temperatures = {300.0};
  cfg.distances_um = {0.5, 1.0, 2.0, 15.0, 20.0};
  cli::validate(cfg);
  return cli::execute(cfg);
}

Verdict c8_fig1(const std::string& csv) {
  Verdict v;
  std::map<std::string, std::map<double, std::pair<double, double>>> ratio;
  std::istringstream is(csv);
  bool header = true;
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> c;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) c.push_back(cell);
    ratio[c[0]][std::stod(c[1])] = {std::stod(c[5]), std::stod(c[6])};
  }
  for (double d : {0.5, 1.0}) {
    const double r = ratio["Si"][d].first;
    v.check(std::abs(r - 1.0) <= tol::si_ratio, fmt::format("(a) Si drift ratio at d={} um: {:.6f} (1 +- 1e-3)", d, r));
  }
  const double ge2 = ratio["Ge"][2.0].first;
  v.check(ge2 > tol::ge_ratio_min, fmt::format("(a) Ge drift ratio at d=2 um: {:.4f} (>1.01)", ge2));

  const auto ge = germanium();
  const double d15 = 15e-4;
  const Geometry g = identical_plates(ge, model::Drift{}, d15);
  const double asym = free_energy_per_area(perfect_static_tm_source(g, 300.0), d15, 300.0).value /
                      free_energy_per_area(bare_source(g, 300.0), d15, 300.0).value;
  const double ge15 = ratio["Ge"][15.0].first;
  v.check(rel(ge15, asym) <= tol::asymptote,
          fmt::format("(b) Ge drift ratio at 15 um {:.4f} vs perfect-n=0-TM asymptote {:.4f}: rel {:.3f} (<=5%)", ge15,
                      asym, rel(ge15, asym)));
  const double cge = ratio["Ge"][20.0].second;
  const double csi = ratio["Si"][20.0].second;
  v.check(rel(cge, csi) <= tol::cond_converge,
          fmt::format("(c) cond ratios at 20 um: Ge {:.4f}, Si {:.4f}, rel {:.3f} (<=2%)", cge, csi, rel(cge, csi)));
  return v;
}

Verdict c9_single_mode() {
  Verdict v;
  for (const auto& spec : {germanium(), silicon()}) {
    double worst = 0.0;
    for (double d_um : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const Geometry g = identical_plates(spec, model::Drift{}, d_um * 1e-4);
      const AmplitudeSource drift = geometry_source(g, 300.0);
      const AmplitudeSource bare = bare_source(g, 300.0);
      AmplitudeSource mixed = [drift, bare](std::int64_t n, const Mode& m) { return n == 0 ? drift(n, m) : bare(n, m); };
      worst = std::max(worst, rel(free_energy_per_area(drift, g.d, 300.0).value,
                                  free_energy_per_area(mixed, g.d, 300.0).value));
    }
    v.check(worst < tol::single_mode,
            fmt::format("{}: n>=1 drift -> bare changes E by at most {:.2e} over d in [0.5, 10] um (<1e-3)", spec.name, worst));
  }
  return v;
}

Verdict c10_nernst() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const Geometry g = identical_plates(germanium(), model::Drift{}, 1e-4);
  const auto rep = nernst_sweep(g, {300, 75, 40, 20, 10});
  std::string seq;
  for (const auto& p : rep.points) seq += fmt::format(" S({:g})={:.3e}", p.T, p.S);
  v.check(rep.low_T_monotone, "|S| strictly decreasing over T = 75, 40, 20, 10 K:" + seq);
  v.check(rep.low_to_high_ratio < tol::nernst_ratio,
          fmt::format("|S(10 K)|/|S(300 K)| = {:.3e} (<0.05)", rep.low_to_high_ratio));
  const auto te = g_probe(Polarization::TE, 1e4, g, 300.0);
  const auto tm = g_probe(Polarization::TM, 1e4, g, 300.0);
  v.check(std::abs(te.g_xi) <= te.g_xi_error,
          fmt::format("TE g_xi(0) = {:.2e} within stencil error {:.2e}", te.g_xi, te.g_xi_error));
  v.check(tm.g_xi > 0.0 && tm.g_xi > tm.g_xi_error, fmt::format("TM g_xi(0) = {:.3e} > 0 (error {:.1e})", tm.g_xi, tm.g_xi_error));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.check(secs < 600.0, fmt::format("runtime {:.2f} s (<600 s)", secs));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto selected = [&](int n) { return only.empty() || only.count(n) > 0; };

  std::string fig1_first;
  auto fig1_once = [&]() -> const std::string& {
    if (fig1_first.empty()) fig1_first = fig1_csv();
    return fig1_first;
  };

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"material anchors", c1_material_anchors},
      {"Debye radii", c2_debye_radii},
      {"static-limit identities", c3_static_limits},
      {"ideal-dielectric reduction", c4_dielectric_reduction},
      {"boundary-condition oracle", c5_bc_oracle},
      {"nonlocal equivalence", c6_nonlocal},
      {"Lifshitz engine", c7_lifshitz_engine},
      {"fig1 ratios", [&] {
         const auto t0 = std::chrono::steady_clock::now();
         Verdict v = c8_fig1(fig1_once());
         const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         v.check(secs < 300.0, fmt::format("runtime {:.2f} s (<300 s)", secs));
         return v;
       }},
      {"single-mode claim", c9_single_mode},
      {"Nernst trend", c10_nernst},
      {"determinism", [&] {
         Verdict v;
         const std::string a = fig1_once();
         const std::string b = fig1_csv();
         v.check(a == b, fmt::format("two criterion-8 CSV runs byte-identical ({} bytes)", a.size()));
         return v;
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!selected(n)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::string detail;
    for (const auto& note : v.notes) detail += (detail.empty() ? "" : "; ") + note;
    fmt::print("criterion {:>2} {:<28} {}  {}\n", n, criteria[i].first, v.pass ? "PASS" : "FAIL", detail);
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
