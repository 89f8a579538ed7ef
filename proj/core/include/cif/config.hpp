#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cif/integrate.hpp"

namespace cif {

/// Run configuration read from the line-oriented `key = value` format.
/// Defaults and ranges are listed in docs/config.md.
struct Config {
  std::size_t grid_n = 64;
  double grid_length = 2.0 * std::numbers::pi;

  SchemeKind scheme_kind = SchemeKind::MollifiedProjected;
  /// Required for schemes b and c; scheme a falls back to kReferenceEps.
  std::optional<double> scheme_eps;
  MollifierKind mollifier = MollifierKind::gaussian();
  Splitting splitting = Splitting::Strang;
  bool literal_sandwich = false;

  std::string law_id = "constant";
  /// Empty means the law's default parameters.
  std::vector<double> law_params;

  std::string init_preset = "taylor_green";
  double init_amplitude = 0.1;
  /// none | gradient
  std::string init_v0_1 = "none";
  std::string init_file;

  double t_final = 0.5;
  double cfl = 0.4;
  std::optional<double> dt_override;

  std::string output_dir = ".";
  std::size_t output_every = 1;
  bool output_fields = false;
  double sobolev_s = 3.0;

  std::vector<double> study_eps_list;
};

/// Parses `text`, then applies each `key=value` override in order.
/// Throws ConfigError naming the key and line for unknown keys, malformed
/// values, range violations and missing required keys.
Config parse_config(std::string_view text, const std::vector<std::string>& overrides = {});
/// Reads the file and calls parse_config. Throws ConfigError if unreadable.
Config load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Parses a comma-separated list of positive reals ("0.2,0.1").
std::vector<double> parse_real_list(std::string_view text, std::string_view key);

}  // namespace cif
