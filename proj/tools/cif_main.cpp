// cif: command-line front end (run, study, symbol, oracle).
//
// Exit codes: 0 success, 1 configuration or usage error, 2 physical failure
// (positivity loss, blow-up) or, for `oracle`, a distance above tolerance.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "cif/config.hpp"
#include "cif/errors.hpp"
#include "cif/io.hpp"
#include "cif/setup.hpp"
#include "cif/study.hpp"
#include "cif/symbol.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigFailure = 1;
constexpr int kPhysicalFailure = 2;
constexpr double kOracleTolerance = 1e-5;

std::filesystem::path prepare_dir(const cif::Config& c) {
  std::filesystem::path dir(c.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw cif::ConfigError(fmt::format("output.dir: cannot create '{}': {}", c.output_dir, ec.message()));
  return dir;
}

int cmd_run(const std::string& path, const std::vector<std::string>& overrides) {
  const cif::Config cfg = cif::load_config(path, overrides);
  const cif::State init = cif::build_initial_state(cfg);
  const cif::PressureLaw law = cif::build_law(cfg);
  const cif::SchemeConfig scheme = cif::build_scheme(cfg, init.grid());
  const cif::TimeControls controls = cif::build_controls(cfg);
  const auto dir = prepare_dir(cfg);

  const cif::RunReport report = cif::run_simulation(init, scheme, law, controls);
  cif::write_diagnostics_csv(report, dir / "diagnostics.csv");
  if (cfg.output_fields) {
    cif::write_field_dump(cif::prepare_initial_state(init, scheme), 0.0, dir / "initial.cifd");
    cif::write_field_dump(*report.final_state, report.final_time(), dir / "final.cifd");
  }
  fmt::print("scheme {} eps {:.6g} law {}: {} steps, t = {:.6g}\n", cif::to_string(scheme.kind),
             scheme.eps, law.id, report.steps, report.final_time());
  if (!report.succeeded()) {
    fmt::print("failure: {} at t = {:.6g}: {}\n", cif::to_string(report.failure->kind),
               report.failure->time, report.failure->message);
    return kPhysicalFailure;
  }
  return kOk;
}

int cmd_study(const std::string& path, const std::string& eps_text,
              const std::vector<std::string>& overrides) {
  const cif::Config cfg = cif::load_config(path, overrides);
  std::vector<double> eps = eps_text.empty() ? cfg.study_eps_list
                                             : cif::parse_real_list(eps_text, "--eps-list");
  if (eps.empty()) throw cif::ConfigError("study.eps_list: no eps values (use --eps-list)");
  const cif::State init = cif::build_initial_state(cfg);
  const cif::PressureLaw law = cif::build_law(cfg);
  cif::SchemeConfig scheme = cif::build_scheme(cfg, init.grid());
  const cif::TimeControls controls = cif::build_controls(cfg);
  const auto dir = prepare_dir(cfg);

  const cif::StudyReport study = cif::run_study(init, scheme, law, controls, eps);
  cif::write_study_csv(study, dir / "study.csv");

  fmt::print("scheme {} study, dt = {:.6g}, compared at t = {:.6g}{}\n",
             cif::to_string(study.scheme), study.dt, study.distance.compare_time,
             study.distance.truncated ? " (truncated)" : "");
  for (std::size_t i = 0; i < study.runs.size(); ++i) {
    fmt::print("  eps {:<10.4g} distance {:.6e}", study.eps_values[i], study.distance.distances[i]);
    if (i < study.constraint_constants.size()) {
      fmt::print("  constant (empirical) {:.6e}", study.constraint_constants[i]);
    }
    fmt::print("{}\n", study.runs[i].succeeded() ? "" : "  [failed]");
  }
  fmt::print("rate (empirical) {:.4f}, distances {}\n", study.rate,
             study.distance.nonincreasing ? "nonincreasing" : "NOT monotone");
  if (!study.constraint_constants.empty()) {
    fmt::print("constant spread {:.4f}\n", cif::spread_factor(study.constraint_constants));
  }
  bool failed = !study.reference.succeeded();
  for (const auto& r : study.runs) failed = failed || !r.succeeded();
  return failed ? kPhysicalFailure : kOk;
}

int cmd_symbol(double rho, const std::vector<double>& v, double f, const std::vector<double>& xi) {
  if (v.size() != 2 || xi.size() != 2) throw cif::ConfigError("--v and --xi take two components");
  if (!(rho > 0.0)) throw cif::ConfigError("--rho must be positive");
  const Eigen::MatrixXd a = cif::assemble_symbol(rho, v, f, xi);
  std::string closed;
  try {
    for (double l : cif::eigenvalues_closed_form(rho, v, f, xi)) closed += fmt::format(" {:.12g}", l);
  } catch (const cif::HyperbolicityLoss&) {
    closed = " undefined (f rho < 0)";
  }
  fmt::print("closed form:{}\n", closed);
  const auto numerical = cif::eigenvalues_numerical(a);
  fmt::print("numerical:");
  double max_imag = 0.0;
  for (const auto& l : numerical) {
    fmt::print(" {:.12g}{:+.3g}i", l.real(), l.imag());
    max_imag = std::max(max_imag, std::abs(l.imag()));
  }
  fmt::print("\n");
  const cif::Symmetrizer s = cif::symmetrizer(rho, f, 3);
  fmt::print("symmetrizer: diag({:.12g}, {:.12g}, {:.12g}){}\n", s.diagonal[0], s.diagonal[1],
             s.diagonal[2], s.positive_definite ? "" : " not positive definite");
  const double middle = v[0] * xi[0] + v[1] * xi[1];
  const std::size_t mult = cif::geometric_multiplicity(a, middle);
  const bool hyperbolic = f * rho > 0.0 && max_imag <= 1e-10 && mult == cif::kDim - 1;
  fmt::print("hyperbolic: {}\n", hyperbolic ? "yes" : "no");
  return kOk;
}

int cmd_oracle(const std::string& path, const std::vector<std::string>& overrides) {
  const cif::Config cfg = cif::load_config(path, overrides);
  const cif::State init = cif::build_initial_state(cfg);
  const cif::PressureLaw law = cif::build_law(cfg);
  if (!law.has_phi()) {
    throw cif::ConfigError(fmt::format("law.id: '{}' depends on v; the oracle needs f = f(rho)", law.id));
  }
  const cif::TimeControls controls = cif::build_controls(cfg);
  const double eps = cfg.scheme_eps.value_or(cif::kReferenceEps);
  const cif::OraclePair pair = cif::run_oracle_pair(init, law, controls, eps, cfg.mollifier);
  const auto& c = pair.comparison;
  fmt::print("v distance        {:.6e}\n", c.v_distance);
  fmt::print("rho distance      {:.6e}\n", c.rho_distance);
  fmt::print("pressure distance {:.6e}\n", c.pressure_distance);
  return c.max() > kOracleTolerance ? kPhysicalFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral solver for nonhomogeneous compressible-incompressible flow"};
  app.require_subcommand(1);

  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off");

  std::string config_path;
  std::vector<std::string> overrides;
  std::string eps_list;

  auto* run = app.add_subcommand("run", "Run one simulation");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--override", overrides, "key=value, applied after the file");

  auto* study = app.add_subcommand("study", "eps sweep against a scheme-a reference");
  study->add_option("--config", config_path, "Config file")->required();
  study->add_option("--eps-list", eps_list, "Comma-separated eps values");
  study->add_option("--override", overrides, "key=value, applied after the file");

  double rho = 1.0, f = 1.0;
  std::vector<double> v{0.0, 0.0}, xi{1.0, 0.0};
  auto* symbol = app.add_subcommand("symbol", "Eigen-analysis of the symbol at one point");
  symbol->add_option("--rho", rho, "Density")->required();
  symbol->add_option("--v", v, "Velocity VX,VY")->delimiter(',')->required();
  symbol->add_option("--f", f, "Pressure coefficient f")->required();
  symbol->add_option("--xi", xi, "Direction X,Y")->delimiter(',')->required();

  auto* oracle = app.add_subcommand("oracle", "Compare scheme a with the reduction oracle");
  oracle->add_option("--config", config_path, "Config file")->required();
  oracle->add_option("--override", overrides, "key=value, applied after the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigFailure;
  }
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*run) return cmd_run(config_path, overrides);
    if (*study) return cmd_study(config_path, eps_list, overrides);
    if (*symbol) return cmd_symbol(rho, v, f, xi);
    if (*oracle) return cmd_oracle(config_path, overrides);
  } catch (const cif::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const cif::PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const cif::HyperbolicityLoss& e) {
    std::cerr << "physical failure: " << e.what() << '\n';
    return kPhysicalFailure;
  } catch (const cif::PositivityLoss& e) {
    std::cerr << "physical failure: " << e.what() << '\n';
    return kPhysicalFailure;
  } catch (const cif::NumericalBlowup& e) {
    std::cerr << "physical failure: " << e.what() << '\n';
    return kPhysicalFailure;
  } catch (const cif::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigFailure;
  }
  return kConfigFailure;
}
