#include <fmt/format.h>

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "driftcas/cli.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/thermo.hpp"

namespace driftcas::cli {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError(fmt::format("{}: '{}' is not a finite number", what, t));
  }
  return v;
}

bool parse_bool(std::string_view text, std::string_view what) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", what, t));
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += fmt::format("{:.17g}", v[i]);
  }
  return s;
}

bool contains(const std::vector<std::string>& v, const std::string& key) {
  return std::find(v.begin(), v.end(), key) != v.end();
}

const std::vector<std::string> kModels{"bare", "cond", "drift", "nonlocal"};
const std::vector<std::string> kCommands{"materials", "reflect", "energy",          "pressure",
                                         "entropy",   "fig1",    "nernst",          "nonlocal-verify",
                                         "modeplot"};
const std::vector<std::string> kSingleMaterial{"entropy", "nernst", "nonlocal-verify", "modeplot"};
const std::vector<std::string> kMultiMaterialDefault{"materials", "fig1"};

void apply_command_defaults(RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (cfg.materials.empty()) {
    cfg.materials = contains(kMultiMaterialDefault, c) ? std::vector<std::string>{"Ge", "Si"}
                                                       : std::vector<std::string>{"Ge"};
  }
  if (cfg.temperatures.empty()) {
    if (c == "nernst") {
      cfg.temperatures = {300, 150, 75, 40, 20, 10};
    } else if (c == "modeplot") {
      cfg.temperatures = {1, 150, 300};
    } else {
      cfg.temperatures = {300};
    }
  }
  if (cfg.distances_um.empty()) {
    if (c == "fig1") {
      cfg.distances_um = parse_list("0.1:20:log25", "d");
    } else if (c == "energy" || c == "pressure" || c == "entropy" || c == "nernst" ||
               c == "modeplot") {
      cfg.distances_um = {1.0};
    }
  }
  for (double T : cfg.temperatures) {
    if (!(T > 0.0)) throw ConfigError(fmt::format("temperature {} K must be positive", T));
    if (c == "entropy" || c == "nernst") {
      const double h = cfg.fd_step > 0.0 ? cfg.fd_step : default_fd_step(T);
      if (!(T - 2.0 * h > 0.0)) {
        throw ConfigError(fmt::format(
            "temperature {} K too low for finite-difference step {} K (needs T > 2 step)", T, h));
      }
    }
  }
  const double xi1 = phys::matsubara_xi(1, cfg.temperatures.front());
  if (cfg.xi.empty()) {
    if (c == "reflect") {
      cfg.xi = {0.0, xi1, 10 * xi1, 100 * xi1};
    } else if (c == "nonlocal-verify") {
      for (double n : {1, 3, 10, 30, 100, 300, 1000}) cfg.xi.push_back(n * xi1);
    } else if (c == "modeplot") {
      const double ref = phys::matsubara_xi(1, 300.0);
      cfg.xi.push_back(0.0);
      for (double f : parse_list("1e-3:10:log9", "xi")) cfg.xi.push_back(f * ref);
    }
  }
  if (cfg.k.empty()) {
    if (c == "reflect" || c == "nonlocal-verify") {
      cfg.k = parse_list("1e2:1e6:log9", "k");
    } else if (c == "modeplot") {
      cfg.k = parse_list("1e2:1e6:log17", "k");
    }
  }
}

}  // namespace

const std::vector<std::string>& material_keys() {
  static const std::vector<std::string> keys{
      "eps0",     "eps_inf",   "omega0_rad_s", "nc_prefactor", "nv_prefactor",
      "gap_E0_eV", "gap_alpha_eV_per_K", "gap_beta_K", "tau0_ps", "tau1_ps",
      "tau_C1",   "tau_C2",    "mass_ratio",   "carrier_doubling", "sigma0_ohm_cm"};
  return keys;
}

const std::vector<std::string>& run_keys() {
  static const std::vector<std::string> keys{"model", "T",      "d",       "sigma0",
                                             "xi",    "k",      "fd_step", "method",
                                             "tol_quad", "tol_sum"};
  return keys;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  if (t.empty()) return {};
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) {
      throw ConfigError(fmt::format("{}: range must be start:stop:N or start:stop:logN", what));
    }
    const double a = parse_number(parts[0], what);
    const double b = parse_number(parts[1], what);
    const bool log = parts[2].rfind("log", 0) == 0;
    const double nd = parse_number(log ? std::string_view(parts[2]).substr(3) : parts[2], what);
    if (nd < 2 || nd != std::floor(nd) || nd > 1e6) {
      throw ConfigError(fmt::format("{}: range count must be an integer >= 2", what));
    }
    const int n = static_cast<int>(nd);
    if (log && !(a > 0.0 && b > 0.0)) {
      throw ConfigError(fmt::format("{}: logarithmic range needs positive endpoints", what));
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double f = static_cast<double>(i) / (n - 1);
      v[static_cast<std::size_t>(i)] =
          log ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a);
    }
    v.front() = a;
    v.back() = b;
    return v;
  }
  std::vector<double> v;
  for (const auto& p : split(t, ',')) v.push_back(parse_number(p, what));
  return v;
}

double parse_sigma(std::string_view text) {
  const auto parts = split(text, '/');
  double v = 0.0;
  if (parts.size() == 1) {
    v = parse_number(parts[0], "sigma0");
  } else if (parts.size() == 2) {
    const double den = parse_number(parts[1], "sigma0");
    if (den == 0.0) throw ConfigError("sigma0: zero denominator");
    v = parse_number(parts[0], "sigma0") / den;
  } else {
    throw ConfigError("sigma0: expected 'x' or 'a/b'");
  }
  if (v < 0.0) throw ConfigError("sigma0: conductivity must be non-negative");
  return v;
}

std::map<std::string, RawSection> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::string> lines;
  std::vector<std::string> embedded;
  for (std::string line; std::getline(in, line);) {
    lines.push_back(line);
    if (line.rfind("#% ", 0) == 0) embedded.push_back(line.substr(3));
  }
  std::ostringstream text;
  for (const auto& l : embedded.empty() ? lines : embedded) text << l << '\n';

  boost::property_tree::ptree tree;
  std::istringstream is(text.str());
  try {
    boost::property_tree::ini_parser::read_ini(is, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(fmt::format("config file '{}': {}", path, e.message()));
  }
  std::map<std::string, RawSection> sections;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(fmt::format("config file '{}': key '{}' outside a section", path, section));
    }
    auto& dst = sections[section];
    for (const auto& [key, value] : body) dst[key] = value.data();
  }
  return sections;
}

void apply_sections(RunConfig& cfg, const std::map<std::string, RawSection>& sections) {
  for (const auto& [section, body] : sections) {
    if (section == "material") {
      for (const auto& [key, value] : body) {
        if (key == "name") {
          cfg.materials = split(value, ',');
        } else if (contains(material_keys(), key)) {
          cfg.material_overrides[key] = value;
        } else {
          throw ConfigError(fmt::format("unknown key '{}' in section [material]", key));
        }
      }
    } else if (section == "run") {
      for (const auto& [key, value] : body) {
        if (key == "model") {
          cfg.model = trim(value);
        } else if (key == "T") {
          cfg.temperatures = parse_list(value, "T");
        } else if (key == "d") {
          cfg.distances_um = parse_list(value, "d");
        } else if (key == "sigma0") {
          cfg.sigma0 = trim(value);
        } else if (key == "xi") {
          cfg.xi = parse_list(value, "xi");
        } else if (key == "k") {
          cfg.k = parse_list(value, "k");
        } else if (key == "fd_step") {
          cfg.fd_step = parse_number(value, "fd_step");
        } else if (key == "method") {
          cfg.method = trim(value);
        } else if (key == "tol_quad") {
          cfg.tol_quad = parse_number(value, "tol_quad");
        } else if (key == "tol_sum") {
          cfg.tol_sum = parse_number(value, "tol_sum");
        } else {
          throw ConfigError(fmt::format("unknown key '{}' in section [run]", key));
        }
      }
    } else {
      throw ConfigError(fmt::format("unknown section [{}]", section));
    }
  }
}

void validate(RunConfig& cfg) {
  if (!contains(kCommands, cfg.command)) {
    throw ConfigError(fmt::format("unknown subcommand '{}'", cfg.command));
  }
  if (!contains(kModels, cfg.model)) {
    throw ConfigError(fmt::format("unknown model '{}' (bare, cond, drift, nonlocal)", cfg.model));
  }
  if (cfg.method != "closed" && cfg.method != "quadrature") {
    throw ConfigError(fmt::format("unknown method '{}' (closed, quadrature)", cfg.method));
  }
  for (double tol : {cfg.tol_quad, cfg.tol_sum}) {
    if (!(tol >= 1e-12 && tol <= 1e-4)) {
      throw ConfigError(fmt::format("tolerance {} outside [1e-12, 1e-4]", tol));
    }
  }
  if (!(cfg.fd_step >= 0.0)) throw ConfigError("fd_step must be non-negative");
  apply_command_defaults(cfg);
  for (const auto& m : cfg.materials) {
    if (m.empty()) throw ConfigError("empty material name");
  }
  if (contains(kSingleMaterial, cfg.command) && cfg.materials.size() != 1) {
    throw ConfigError(fmt::format("{} takes exactly one material", cfg.command));
  }
  if (!cfg.material_overrides.empty() && cfg.materials.size() != 1) {
    throw ConfigError("inline material parameters need exactly one material name");
  }
  if ((cfg.command == "entropy" || cfg.command == "nernst" || cfg.command == "modeplot") &&
      cfg.distances_um.size() != 1) {
    throw ConfigError(fmt::format("{} takes exactly one distance", cfg.command));
  }
  for (double d : cfg.distances_um) {
    if (!(d > 0.0)) throw ConfigError(fmt::format("distance {} um must be positive", d));
  }
  std::sort(cfg.distances_um.begin(), cfg.distances_um.end());
  for (double x : cfg.xi) {
    if (!(x >= 0.0)) throw ConfigError(fmt::format("xi {} must be non-negative", x));
  }
  for (double k : cfg.k) {
    if (!(k > 0.0)) throw ConfigError(fmt::format("k {} must be positive", k));
  }
  if (!cfg.sigma0.empty()) parse_sigma(cfg.sigma0);
  for (const auto& m : cfg.materials) resolve_material(cfg, m);
}

MaterialSpec resolve_material(const RunConfig& cfg, const std::string& name) {
  const auto& o = cfg.material_overrides;
  std::optional<MaterialSpec> base = builtin_material(name);
  MaterialSpec spec = base.value_or(MaterialSpec{});
  spec.name = base ? base->name : name;
  if (!base) {
    for (const auto& key : material_keys()) {
      if (key == "carrier_doubling" || key == "sigma0_ohm_cm") continue;
      if (!o.count(key)) {
        throw ConfigError(fmt::format(
            "material '{}' is not built in; [material] key '{}' is required", name, key));
      }
    }
  }
  auto num = [&](const char* key, double& field, double scale = 1.0) {
    if (auto it = o.find(key); it != o.end()) field = parse_number(it->second, key) * scale;
  };
  num("eps0", spec.permittivity.eps0);
  num("eps_inf", spec.permittivity.eps_inf);
  num("omega0_rad_s", spec.permittivity.omega0);
  num("nc_prefactor", spec.nc_prefactor);
  num("nv_prefactor", spec.nv_prefactor);
  num("gap_E0_eV", spec.gap_E0, phys::units::erg_per_eV);
  num("gap_alpha_eV_per_K", spec.gap_alpha, phys::units::erg_per_eV);
  num("gap_beta_K", spec.gap_beta);
  num("tau0_ps", spec.tau0, phys::units::s_per_ps);
  num("tau1_ps", spec.tau1, phys::units::s_per_ps);
  num("tau_C1", spec.tau_C1);
  num("tau_C2", spec.tau_C2);
  num("mass_ratio", spec.mass_ratio);
  if (auto it = o.find("carrier_doubling"); it != o.end()) {
    spec.carrier_doubling = parse_bool(it->second, "carrier_doubling");
  }
  if (auto it = o.find("sigma0_ohm_cm"); it != o.end()) {
    spec.reference_sigma0 = phys::sigma_gaussian(parse_sigma(it->second));
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

std::string effective_config(const RunConfig& cfg) {
  std::string s = "[material]\n";
  std::string names;
  for (std::size_t i = 0; i < cfg.materials.size(); ++i) {
    if (i) names += ',';
    names += cfg.materials[i];
  }
  s += "name = " + names + "\n";
  if (cfg.materials.size() == 1) {
    const MaterialSpec m = resolve_material(cfg, cfg.materials.front());
    auto line = [&s](const char* key, double v) { s += fmt::format("{} = {:.17g}\n", key, v); };
    line("eps0", m.permittivity.eps0);
    line("eps_inf", m.permittivity.eps_inf);
    line("omega0_rad_s", m.permittivity.omega0);
    line("nc_prefactor", m.nc_prefactor);
    line("nv_prefactor", m.nv_prefactor);
    line("gap_E0_eV", phys::erg_to_eV(m.gap_E0));
    line("gap_alpha_eV_per_K", phys::erg_to_eV(m.gap_alpha));
    line("gap_beta_K", m.gap_beta);
    line("tau0_ps", phys::s_to_ps(m.tau0));
    line("tau1_ps", phys::s_to_ps(m.tau1));
    line("tau_C1", m.tau_C1);
    line("tau_C2", m.tau_C2);
    line("mass_ratio", m.mass_ratio);
    s += fmt::format("carrier_doubling = {}\n", m.carrier_doubling ? "true" : "false");
    if (m.reference_sigma0) {
      line("sigma0_ohm_cm", *m.reference_sigma0 / phys::units::gaussian_per_siemens_cm);
    }
  }
  s += "[run]\n";
  s += "model = " + cfg.model + "\n";
  s += "T = " + join_numbers(cfg.temperatures) + "\n";
  s += "d = " + join_numbers(cfg.distances_um) + "\n";
  s += "sigma0 = " + cfg.sigma0 + "\n";
  s += "xi = " + join_numbers(cfg.xi) + "\n";
  s += "k = " + join_numbers(cfg.k) + "\n";
  s += fmt::format("fd_step = {:.17g}\n", cfg.fd_step);
  s += "method = " + cfg.method + "\n";
  s += fmt::format("tol_quad = {:.17g}\n", cfg.tol_quad);
  s += fmt::format("tol_sum = {:.17g}\n", cfg.tol_sum);
  return s;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SumSettings sum_settings(const RunConfig& cfg) {
  SumSettings s;
  s.quad_rel_tol = cfg.tol_quad;
  s.sum_rel_tol = cfg.tol_sum;
  return s;
}

}  // namespace driftcas::cli
