#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "driftcas/cli.hpp"
#include "driftcas/nonlocal.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/reflection.hpp"
#include "driftcas/thermo.hpp"
#include "driftcas/version.hpp"

namespace driftcas::cli {

namespace {

std::string num(double v) { return fmt::format("{:.11e}", v); }

class Csv {
 public:
  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) body_ += ',';
      body_ += c;
      first = false;
    }
    body_ += '\n';
  }
  void comment(const std::string& line) { body_ += "# " + line + "\n"; }
  const std::string& str() const { return body_; }

 private:
  std::string body_;
};

std::string units_for(const std::string& command) {
  if (command == "materials") {
    return "T_K=K E_g=eV tau=ps densities=cm^-3 R_D=um sigma0_per_s=1/s "
           "sigma0_ohm_cm=1/(Ohm cm) v_T=cm/s D=cm^2/s";
  }
  if (command == "reflect") return "xi=rad/s k=1/cm r=dimensionless";
  if (command == "energy") return "T=K d=um value=erg/cm^2 errors=erg/cm^2";
  if (command == "pressure") return "T=K d=um value=dyn/cm^2 (positive = attraction) errors=dyn/cm^2";
  if (command == "fig1") return "d=um E=erg/cm^2 ratios=dimensionless T=300 K unless configured";
  if (command == "entropy" || command == "nernst") return "T=K S=erg/(cm^2 K) error_est=erg/(cm^2 K)";
  if (command == "nonlocal-verify") return "k=1/cm xi=rad/s r=dimensionless";
  return "T=K xi=rad/s k=1/cm g=dimensionless";
}

ReflectionModel make_model(const RunConfig& cfg, const MaterialSpec& spec, double T) {
  if (cfg.model == "bare") return model::Bare{};
  if (cfg.model == "drift") return model::Drift{};
  if (cfg.model == "nonlocal") return model::Nonlocal{};
  return model::Conductivity{cond_sigma(cfg, spec, T)};
}

}  // namespace

double cond_sigma(const RunConfig& cfg, const MaterialSpec& spec, double T) {
  if (!cfg.sigma0.empty()) return phys::sigma_gaussian(parse_sigma(cfg.sigma0));
  if (spec.reference_sigma0) return *spec.reference_sigma0;
  return material_state(spec, T).sigma0;
}

namespace {

void cmd_materials(const RunConfig& cfg, Csv& csv) {
  csv.row({"material", "T_K", "E_g_eV", "tau_ps", "n_c_cm3", "n_v_cm3", "n0_cm3", "R_D_um",
           "sigma0_per_s", "sigma0_ohm_cm", "v_T_cm_s", "D_cm2_s", "out_of_range"});
  for (const auto& name : cfg.materials) {
    const MaterialSpec spec = resolve_material(cfg, name);
    for (double T : cfg.temperatures) {
      const MaterialState st = material_state(spec, T);
      csv.row({spec.name, num(T), num(phys::erg_to_eV(band_gap(spec, T))), num(phys::s_to_ps(st.tau)),
               num(conduction_dos(spec, T)), num(valence_dos(spec, T)), num(st.n0),
               num(phys::cm_to_um(st.R_D)), num(st.sigma0),
               num(st.sigma0 / phys::units::gaussian_per_siemens_cm), num(st.v_T), num(st.D),
               st.out_of_range ? "true" : "false"});
    }
  }
}

void cmd_reflect(const RunConfig& cfg, Csv& csv) {
  csv.row({"material", "T_K", "model", "polarization", "xi_rad_s", "k_cm", "r"});
  for (const auto& name : cfg.materials) {
    const MaterialSpec spec = resolve_material(cfg, name);
    for (double T : cfg.temperatures) {
      const MaterialState st = material_state(spec, T);
      const ReflectionModel m = make_model(cfg, spec, T);
      for (double xi : cfg.xi) {
        for (double k : cfg.k) {
          const Amplitudes a = amplitudes(m, Mode{xi, k}, spec, st);
          csv.row({spec.name, num(T), cfg.model, "TM", num(xi), num(k), num(a.tm)});
          csv.row({spec.name, num(T), cfg.model, "TE", num(xi), num(k), num(a.te)});
        }
      }
    }
  }
}

void cmd_lifshitz(const RunConfig& cfg, Csv& csv, bool energy) {
  csv.row({"material", "model", "T_K", "d_um", energy ? "E_per_area" : "pressure", "quad_error",
           "truncation_error", "n_last"});
  const SumSettings s = sum_settings(cfg);
  for (const auto& name : cfg.materials) {
    const MaterialSpec spec = resolve_material(cfg, name);
    for (double T : cfg.temperatures) {
      const ReflectionModel m = make_model(cfg, spec, T);
      for (double d_um : cfg.distances_um) {
        const Geometry g = identical_plates(spec, m, phys::um_to_cm(d_um));
        const SummationResult r = energy ? free_energy_per_area(g, T, s) : pressure(g, T, s);
        csv.row({spec.name, cfg.model, num(T), num(d_um), num(r.value),
                 num(r.quadrature_error_estimate), num(r.truncation_error_estimate),
                 std::to_string(r.n_truncated_at)});
        for (const auto& w : r.warnings) csv.comment("warning: " + w);
      }
    }
  }
}

void cmd_fig1(const RunConfig& cfg, Csv& csv) {
  csv.row({"material", "d_um", "E_bare", "E_drift", "E_cond", "ratio_drift", "ratio_cond"});
  const SumSettings s = sum_settings(cfg);
  const double T = cfg.temperatures.front();
  for (const auto& name : cfg.materials) {
    const MaterialSpec spec = resolve_material(cfg, name);
    const ReflectionModel cond = model::Conductivity{cond_sigma(cfg, spec, T)};
    for (double d_um : cfg.distances_um) {
      const double d = phys::um_to_cm(d_um);
      const Geometry drift = identical_plates(spec, model::Drift{}, d);
      const double eb = free_energy_per_area(bare_source(drift, T), d, T, s).value;
      const double ed = free_energy_per_area(drift, T, s).value;
      const double ec = free_energy_per_area(identical_plates(spec, cond, d), T, s).value;
      if (std::abs(eb) < 1e-30) {
        throw DomainError("fig1: bare free energy below normalization floor 1e-30 erg/cm^2");
      }
      csv.row({spec.name, num(d_um), num(eb), num(ed), num(ec), num(ed / eb), num(ec / eb)});
    }
  }
}

bool decreasing_with_T(std::vector<EntropyPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.T > b.T; });
  if (pts.size() < 2) return false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(std::abs(pts[i].S) < std::abs(pts[i - 1].S))) return false;
  }
  return true;
}

Geometry single_geometry(const RunConfig& cfg, double T) {
  const MaterialSpec spec = resolve_material(cfg, cfg.materials.front());
  return identical_plates(spec, make_model(cfg, spec, T), phys::um_to_cm(cfg.distances_um.front()));
}

void cmd_entropy(const RunConfig& cfg, Csv& csv) {
  csv.row({"T_K", "S", "error_est"});
  const SumSettings s = sum_settings(cfg);
  std::vector<EntropyPoint> pts;
  for (double T : cfg.temperatures) {
    pts.push_back(entropy(single_geometry(cfg, T), T, cfg.fd_step, s));
    csv.row({num(T), num(pts.back().S), num(pts.back().richardson_error)});
  }
  for (const auto& p : pts) {
    for (const auto& w : p.warnings) csv.comment("warning: " + w);
  }
  csv.comment(fmt::format("trend: {} (|S| decreasing as T decreases)",
                          decreasing_with_T(pts) ? "PASS" : "FAIL"));
}

void cmd_nernst(const RunConfig& cfg, Csv& csv) {
  csv.row({"T_K", "S", "error_est"});
  const SumSettings s = sum_settings(cfg);
  const NernstReport rep = nernst_sweep(single_geometry(cfg, cfg.temperatures.front()),
                                        cfg.temperatures, s);
  for (const auto& p : rep.points) csv.row({num(p.T), num(p.S), num(p.richardson_error)});
  for (const auto& d : rep.diagnostics) csv.comment("diagnostic: " + d);
  const bool pass = rep.low_T_monotone && rep.low_to_high_ratio < 0.05;
  csv.comment(fmt::format(
      "trend: {} (|S| monotone below 75 K: {}; |S(T_min)|/|S(T_max)| = {:.4e}, threshold 0.05)",
      pass ? "PASS" : "FAIL", rep.low_T_monotone ? "yes" : "no", rep.low_to_high_ratio));
}

void cmd_nonlocal_verify(const RunConfig& cfg, Csv& csv) {
  csv.row({"polarization", "k_cm", "xi_rad_s", "r_drift", "r_nonlocal", "rel_diff"});
  const MaterialSpec spec = resolve_material(cfg, cfg.materials.front());
  const double T = cfg.temperatures.front();
  const MaterialState st = material_state(spec, T);
  const auto tensor = nonlocal::drift_tensor(spec, st);
  const auto method =
      cfg.method == "quadrature" ? nonlocal::Method::Quadrature : nonlocal::Method::Closed;
  double worst = 0.0;
  for (double k : cfg.k) {
    for (double xi : cfg.xi) {
      const Mode mode{xi, k};
      const Amplitudes a = amplitudes(model::Drift{}, mode, spec, st);
      const Amplitudes b = xi > 0.0 ? nonlocal::amplitudes_from_tensor(tensor, mode, method)
                                    : nonlocal::amplitudes(mode, spec, st);
      auto rel = [](double x, double y) {
        const double scale = std::max(std::abs(x), std::abs(y));
        return scale > 0.0 ? std::abs(x - y) / scale : 0.0;
      };
      const double dtm = rel(a.tm, b.tm);
      const double dte = rel(a.te, b.te);
      worst = std::max({worst, dtm, dte});
      csv.row({"TM", num(k), num(xi), num(a.tm), num(b.tm), num(dtm)});
      csv.row({"TE", num(k), num(xi), num(a.te), num(b.te), num(dte)});
    }
  }
  csv.comment(fmt::format("summary: max_rel_diff={:.3e} tolerance=1e-08 method={} {}", worst,
                          cfg.method, worst <= 1e-8 ? "PASS" : "FAIL"));
}

void cmd_modeplot(const RunConfig& cfg, Csv& csv) {
  csv.row({"T_K", "polarization", "xi_rad_s", "k_cm", "g"});
  const double d = phys::um_to_cm(cfg.distances_um.front());
  for (double T : cfg.temperatures) {
    const Geometry g = single_geometry(cfg, T);
    const AmplitudeSource src = geometry_source(g, T);
    for (double xi : cfg.xi) {
      for (double k : cfg.k) {
        const Mode mode{xi, k};
        const PlatePair pp = src(0, mode);
        const double u = 2.0 * d * mode.gamma0();
        csv.row({num(T), "TM", num(xi), num(k),
                 num(g_from_product(pp.plate1.tm * pp.plate2.tm, u))});
        csv.row({num(T), "TE", num(xi), num(k),
                 num(g_from_product(pp.plate1.te * pp.plate2.te, u))});
      }
    }
  }
}

}  // namespace

std::string execute(const RunConfig& cfg) {
  const std::string eff = effective_config(cfg);
  std::string head;
  head += fmt::format("# driftcas {}\n", version);
  head += fmt::format("# command: {}\n", cfg.command);
  head += fmt::format("# config_hash: fnv1a64:{:016x}\n", fnv1a(cfg.command + "\n" + eff));
  head += fmt::format("# units: {}\n", units_for(cfg.command));
  std::size_t start = 0;
  while (start < eff.size()) {
    const auto end = eff.find('\n', start);
    head += "#% " + eff.substr(start, end - start) + "\n";
    start = end + 1;
  }

  Csv csv;
  const std::string& c = cfg.command;
  if (c == "materials") {
    cmd_materials(cfg, csv);
  } else if (c == "reflect") {
    cmd_reflect(cfg, csv);
  } else if (c == "energy" || c == "pressure") {
    cmd_lifshitz(cfg, csv, c == "energy");
  } else if (c == "fig1") {
    cmd_fig1(cfg, csv);
  } else if (c == "entropy") {
    cmd_entropy(cfg, csv);
  } else if (c == "nernst") {
    cmd_nernst(cfg, csv);
  } else if (c == "nonlocal-verify") {
    cmd_nonlocal_verify(cfg, csv);
  } else if (c == "modeplot") {
    cmd_modeplot(cfg, csv);
  } else {
    throw ConfigError("unknown subcommand '" + c + "'");
  }
  return head + csv.str();
}

}  // namespace driftcas::cli
