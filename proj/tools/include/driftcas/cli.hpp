#pragma once

// Batch front-end: configuration, subcommand dispatch and CSV emission.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "driftcas/errors.hpp"
#include "driftcas/lifshitz.hpp"
#include "driftcas/materials.hpp"

namespace driftcas::cli {

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kNumericalError = 3 };

/// Invalid command line or configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Raw key/value pairs as they appear in a configuration file, by section.
using RawSection = std::map<std::string, std::string>;

struct RunConfig {
  std::string command;
  std::vector<std::string> materials;  ///< empty selects the command default
  /// Inline material parameters in practical units (see material_keys()).
  RawSection material_overrides;
  std::string model = "drift";
  std::vector<double> temperatures;  ///< K; empty selects the command default
  std::vector<double> distances_um;  ///< sorted ascending; empty selects the default
  std::string sigma0;                ///< 1/(Ohm cm), "x" or "a/b"; empty = material value
  std::vector<double> xi;            ///< rad/s
  std::vector<double> k;             ///< 1/cm
  double fd_step = 0.0;              ///< K; 0 selects the default
  std::string method = "closed";
  double tol_quad = 1e-10;
  double tol_sum = 1e-10;
  std::string out;  ///< empty writes to stdout
};

/// Keys accepted in the [material] section besides "name".
const std::vector<std::string>& material_keys();

/// Keys accepted in the [run] section.
const std::vector<std::string>& run_keys();

/// "x", "a,b,c", "start:stop:N" (linear) or "start:stop:logN" (geometric).
std::vector<double> parse_list(std::string_view text, std::string_view what);

/// Conductivity in 1/(Ohm cm) from "x" or "a/b".
double parse_sigma(std::string_view text);

/// Reads an INI file. A file whose lines start with "#% " (the header of a
/// previous run) is read from those lines only.
std::map<std::string, RawSection> read_config_file(const std::string& path);

/// Applies sections onto cfg; unknown sections or keys raise ConfigError.
void apply_sections(RunConfig& cfg, const std::map<std::string, RawSection>& sections);

/// Checks ranges and normalizes (distances sorted).
void validate(RunConfig& cfg);

/// Resolved material for one name, with overrides applied.
MaterialSpec resolve_material(const RunConfig& cfg, const std::string& name);

/// Canonical INI text of every setting that affects the output.
std::string effective_config(const RunConfig& cfg);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);

SumSettings sum_settings(const RunConfig& cfg);

/// Gaussian dc conductivity for the cond model: the configured value, else
/// the material's reference value, else the transport value at T.
double cond_sigma(const RunConfig& cfg, const MaterialSpec& spec, double T);

/// Renders the CSV for one validated configuration.
std::string execute(const RunConfig& cfg);

/// Entry point: parses argv, runs, writes output, returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace driftcas::cli
