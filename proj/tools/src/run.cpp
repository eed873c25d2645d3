#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <ostream>

#include "driftcas/cli.hpp"

namespace driftcas::cli {

namespace {

struct Flags {
  std::string config, material, model, T, d, sigma0, xi, k, fd_step, method, tol_quad, tol_sum,
      out;
};

void add_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "INI file with [material] and [run] sections");
  sub.add_option("--material", f.material, "material name(s), comma separated (Ge, Si)");
  sub.add_option("--model", f.model, "bare | cond | drift | nonlocal");
  sub.add_option("--T", f.T, "temperature(s) in K: x, a,b,c or start:stop:[log]N");
  sub.add_option("--d", f.d, "distance(s) in um: x, a,b,c or start:stop:[log]N");
  sub.add_option("--sigma0", f.sigma0, "dc conductivity for the cond model, 1/(Ohm cm), x or a/b");
  sub.add_option("--xi", f.xi, "imaginary frequencies in rad/s");
  sub.add_option("--k", f.k, "in-plane wavevectors in 1/cm");
  sub.add_option("--fd-step", f.fd_step, "entropy finite-difference step in K (0 = default)");
  sub.add_option("--method", f.method, "nonlocal-verify h-integrals: closed | quadrature");
  sub.add_option("--tol-quad", f.tol_quad, "relative quadrature tolerance");
  sub.add_option("--tol-sum", f.tol_sum, "relative Matsubara truncation tolerance");
  sub.add_option("--out", f.out, "output CSV path (default stdout)");
}

RunConfig build_config(const std::string& command, const Flags& f) {
  RunConfig cfg;
  cfg.command = command;
  if (!f.config.empty()) apply_sections(cfg, read_config_file(f.config));

  RawSection run;
  auto put = [&run](const char* key, const std::string& v) {
    if (!v.empty()) run[key] = v;
  };
  put("model", f.model);
  put("T", f.T);
  put("d", f.d);
  put("sigma0", f.sigma0);
  put("xi", f.xi);
  put("k", f.k);
  put("fd_step", f.fd_step);
  put("method", f.method);
  put("tol_quad", f.tol_quad);
  put("tol_sum", f.tol_sum);
  std::map<std::string, RawSection> sections{{"run", run}};
  if (!f.material.empty()) {
    // a material given on the command line replaces the configured one,
    // including any inline parameters that belonged to it
    cfg.material_overrides.clear();
    sections["material"] = RawSection{{"name", f.material}};
  }
  apply_sections(cfg, sections);
  cfg.out = f.out;
  validate(cfg);
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir-Lifshitz free energy, pressure and entropy for low-carrier-density plates",
               "driftcas"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"materials", "material parameters and transport quantities"},
      {"reflect", "reflection amplitudes on a (xi, k) grid"},
      {"energy", "free energy per area"},
      {"pressure", "pressure"},
      {"entropy", "entropy by Richardson-extrapolated finite differences"},
      {"fig1", "free energy ratios to the bare-permittivity result"},
      {"nernst", "low-temperature entropy sweep"},
      {"nonlocal-verify", "drift amplitudes against the permittivity-tensor route"},
      {"modeplot", "samples of g(i xi, k) for plotting"}};
  for (const auto& [name, help] : commands) add_flags(*app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    const RunConfig cfg = build_config(app.get_subcommands().front()->get_name(), flags);
    const std::string csv = execute(cfg);
    if (cfg.out.empty()) {
      out << csv;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file '" + cfg.out + "'");
      file << csv;
      if (!file) throw ConfigError("failed writing output file '" + cfg.out + "'");
    }
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace driftcas::cli
