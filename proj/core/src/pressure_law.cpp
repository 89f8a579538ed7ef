#include "cif/pressure_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {
namespace {

std::vector<double> with_defaults(const std::string& id, std::span<const double> given,
                                  std::vector<double> defaults) {
  if (given.empty()) return defaults;
  if (given.size() != defaults.size()) {
    throw ConfigError(fmt::format("law '{}' takes {} parameter(s), got {}", id, defaults.size(),
                                  given.size()));
  }
  return {given.begin(), given.end()};
}

double norm2(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

ScalarField PressureLaw::evaluate(const ScalarField& rho, const VectorField& v) const {
  require_same_grid(rho.grid(), v.grid(), "PressureLaw::evaluate");
  ScalarField out(rho.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = eval(rho[i], Vec{v[0][i], v[1][i]});
  return out;
}

ScalarField PressureLaw::evaluate_phi(const ScalarField& rho) const {
  if (!phi) throw PreconditionError("law '" + id + "' depends on v; no antiderivative phi(rho)");
  ScalarField out(rho.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = phi(rho[i]);
  return out;
}

PressureLaw make_pressure_law(const std::string& id, std::span<const double> params) {
  PressureLaw law;
  law.id = id;
  if (id == "constant") {
    law.params = with_defaults(id, params, {1.0});
    const double fbar = law.params[0];
    law.eval = [fbar](double, const Vec&) { return fbar; };
    law.grad_v = [](double, const Vec&) { return Vec{0.0, 0.0}; };
    law.grad_rho = [](double, const Vec&) { return 0.0; };
    law.phi = [fbar](double rho) { return fbar * rho; };
  } else if (id == "biofilm") {
    law.params = with_defaults(id, params, {0.5});
    const double gamma = law.params[0];
    law.eval = [gamma](double rho, const Vec&) { return gamma / rho; };
    law.grad_v = [](double, const Vec&) { return Vec{0.0, 0.0}; };
    law.grad_rho = [gamma](double rho, const Vec&) { return -gamma / (rho * rho); };
    law.phi = [gamma](double rho) { return gamma * std::log(rho); };
  } else if (id == "kinetic") {
    law.params = with_defaults(id, params, {1.0, 1.0});
    const double fbar = law.params[0];
    const double c = law.params[1];
    law.eval = [fbar, c](double, const Vec& v) { return fbar + c * norm2(v); };
    law.grad_v = [c](double, const Vec& v) { return Vec{2.0 * c * v[0], 2.0 * c * v[1]}; };
    law.grad_rho = [](double, const Vec&) { return 0.0; };
  } else if (id == "affine_rho") {
    law.params = with_defaults(id, params, {1.0, 0.5});
    const double fbar = law.params[0];
    const double a = law.params[1];
    law.eval = [fbar, a](double rho, const Vec&) { return fbar + a * rho; };
    law.grad_v = [](double, const Vec&) { return Vec{0.0, 0.0}; };
    law.grad_rho = [a](double, const Vec&) { return a; };
    law.phi = [fbar, a](double rho) { return fbar * rho + 0.5 * a * rho * rho; };
  } else {
    throw ConfigError("unknown pressure law '" + id +
                      "' (expected constant, biofilm, kinetic or affine_rho)");
  }
  return law;
}

PressureLaw zero_law() {
  PressureLaw law;
  law.id = "zero";
  law.eval = [](double, const Vec&) { return 0.0; };
  law.grad_v = [](double, const Vec&) { return Vec{0.0, 0.0}; };
  law.grad_rho = [](double, const Vec&) { return 0.0; };
  law.phi = [](double) { return 0.0; };
  return law;
}

AdmissibilityReport check_admissible(const PressureLaw& law, std::span<const LawSample> samples) {
  constexpr double kStep = 1e-6;
  constexpr double kFdRelTol = 1e-5;
  constexpr double kParallelTol = 1e-8;
  constexpr double kAlphaTol = 1e-12;

  AdmissibilityReport r;
  r.min_f = std::numeric_limits<double>::infinity();
  r.alpha_min = std::numeric_limits<double>::infinity();
  r.alpha_max = -std::numeric_limits<double>::infinity();
  bool any_moving = false;
  bool all_alpha_zero = true;

  for (const auto& s : samples) {
    if (!(s.rho > 0.0)) throw PreconditionError("check_admissible: sample with rho <= 0");
    const double f = law.eval(s.rho, s.v);
    r.min_f = std::min(r.min_f, f);
    if (!(f > 0.0)) r.positive = false;

    const Vec g = law.grad_v(s.rho, s.v);
    const double gnorm = std::sqrt(norm2(g));

    double fd_err = 0.0;
    for (std::size_t j = 0; j < kDim; ++j) {
      Vec hi = s.v;
      Vec lo = s.v;
      hi[j] += kStep;
      lo[j] -= kStep;
      const double fd = (law.eval(s.rho, hi) - law.eval(s.rho, lo)) / (2.0 * kStep);
      fd_err = std::max(fd_err, std::abs(fd - g[j]));
    }
    const double rel = fd_err / std::max(gnorm, 1.0);
    r.max_fd_error = std::max(r.max_fd_error, rel);
    if (rel > kFdRelTol) r.grad_v_consistent = false;

    const double vv = norm2(s.v);
    if (vv == 0.0) continue;
    any_moving = true;
    const double alpha = (g[0] * s.v[0] + g[1] * s.v[1]) / vv;
    Vec orth{g[0] - alpha * s.v[0], g[1] - alpha * s.v[1]};
    if (std::sqrt(norm2(orth)) > kParallelTol * gnorm) r.gradient_parallel = false;
    if (alpha < -kAlphaTol) r.alpha_nonnegative = false;
    if (std::abs(alpha) > kAlphaTol) all_alpha_zero = false;
    r.alpha_min = std::min(r.alpha_min, alpha);
    r.alpha_max = std::max(r.alpha_max, alpha);
  }
  r.degenerate = any_moving && all_alpha_zero;
  if (!any_moving) {
    r.alpha_min = r.alpha_max = 0.0;
  }
  return r;
}

std::vector<LawSample> default_law_samples(double rho_lo, double rho_hi, double v_max,
                                           std::size_t count) {
  // Low-discrepancy (golden-ratio) sequence; includes |v| = 0.
  std::vector<LawSample> out;
  out.reserve(count);
  constexpr double g1 = 0.6180339887498949;
  constexpr double g2 = 0.7548776662466927;
  constexpr double g3 = 0.5698402909980532;
  for (std::size_t i = 0; i < count; ++i) {
    const double k = static_cast<double>(i);
    const double a = std::fmod(0.5 + g1 * k, 1.0);
    const double b = std::fmod(0.5 + g2 * k, 1.0);
    const double c = std::fmod(0.5 + g3 * k, 1.0);
    const double speed = i == 0 ? 0.0 : v_max * b;
    const double angle = 2.0 * std::numbers::pi * c;
    out.push_back({rho_lo + (rho_hi - rho_lo) * a,
                   Vec{speed * std::cos(angle), speed * std::sin(angle)}});
  }
  return out;
}

}  // namespace cif
