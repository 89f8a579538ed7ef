#include "cif/state.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {

ScalarField State::density() const {
  ScalarField rho = rho_tilde;
  for (auto& r : rho.values()) r += rho_bar;
  return rho;
}

double State::min_density() const { return rho_bar + rho_tilde.min(); }

bool State::all_finite() const noexcept {
  return rho_tilde.all_finite() && v.all_finite() && (!p_tilde || p_tilde->all_finite()) &&
         std::isfinite(rho_bar);
}

Tendency Tendency::zero_like(const State& s) {
  Tendency t{ScalarField(s.grid()), VectorField(s.grid()), std::nullopt};
  if (s.p_tilde) t.p_tilde = ScalarField(s.grid());
  return t;
}

Tendency& Tendency::operator+=(const Tendency& other) { return axpy(1.0, other); }

Tendency& Tendency::operator*=(double s) noexcept {
  rho_tilde *= s;
  v *= s;
  if (p_tilde) *p_tilde *= s;
  return *this;
}

Tendency& Tendency::axpy(double s, const Tendency& other) {
  if (p_tilde.has_value() != other.p_tilde.has_value()) {
    throw DimensionMismatch("tendency: p_tilde block present on one side only");
  }
  rho_tilde.axpy(s, other.rho_tilde);
  v.axpy(s, other.v);
  if (p_tilde) p_tilde->axpy(s, *other.p_tilde);
  return *this;
}

bool Tendency::all_finite() const noexcept {
  return rho_tilde.all_finite() && v.all_finite() && (!p_tilde || p_tilde->all_finite());
}

State advance(const State& s, double dt, const Tendency& k) {
  if (s.p_tilde.has_value() != k.p_tilde.has_value()) {
    throw DimensionMismatch("advance: p_tilde block present on one side only");
  }
  State out = s;
  out.rho_tilde.axpy(dt, k.rho_tilde);
  out.v.axpy(dt, k.v);
  if (out.p_tilde) out.p_tilde->axpy(dt, *k.p_tilde);
  return out;
}

void require_positive_density(const ScalarField& rho, const char* where, double floor) {
  const double m = rho.min();
  if (!(m > floor)) {
    throw PositivityLoss(fmt::format("{}: density {:.6g} at or below vacuum floor {:g}", where, m,
                                     floor),
                         m);
  }
}

State translate(const ScalarField& rho, VectorField v, std::optional<double> rho_bar) {
  require_same_grid(rho.grid(), v.grid(), "translate");
  require_positive_density(rho, "translate");
  const double bar = rho_bar.value_or(rho.mean());
  if (!(bar > 0.0)) throw PreconditionError("translate: rho_bar must be positive");
  ScalarField rt = rho;
  for (auto& r : rt.values()) r -= bar;
  return State{std::move(rt), std::move(v), std::nullopt, bar};
}

ScalarField untranslate(const State& s) { return s.density(); }

double state_distance(const State& a, const State& b) {
  double acc = 0.0;
  const double dr = rms(a.rho_tilde - b.rho_tilde);
  const double dv = rms(a.v - b.v);
  acc += dr * dr + dv * dv;
  if (a.p_tilde && b.p_tilde) {
    const double dp = rms(*a.p_tilde - *b.p_tilde);
    acc += dp * dp;
  }
  return std::sqrt(acc);
}

double state_norm(const State& s) {
  const double r = rms(s.rho_tilde);
  const double v = rms(s.v);
  double acc = r * r + v * v;
  if (s.p_tilde) {
    const double p = rms(*s.p_tilde);
    acc += p * p;
  }
  return std::sqrt(acc);
}

}  // namespace cif
