#include "cif/schemes.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "cif/errors.hpp"
#include "transport_kernel.hpp"

namespace cif {

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::MollifiedProjected:
      return "a";
    case SchemeKind::ContinuousProjection:
      return "b";
    case SchemeKind::ArtificialCompressibility:
      return "c";
    case SchemeKind::ReductionOracle:
      return "oracle";
  }
  return "?";
}

SchemeKind parse_scheme_kind(std::string_view name) {
  if (name == "a") return SchemeKind::MollifiedProjected;
  if (name == "b") return SchemeKind::ContinuousProjection;
  if (name == "c") return SchemeKind::ArtificialCompressibility;
  if (name == "oracle") return SchemeKind::ReductionOracle;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected a, b, c or oracle)");
}

void SchemeConfig::validate(const PressureLaw& law) const {
  if (kind != SchemeKind::ReductionOracle && !(eps > 0.0 && std::isfinite(eps))) {
    throw ConfigError(fmt::format("scheme {}: eps must be positive, got {}", to_string(kind), eps));
  }
  if (kind == SchemeKind::ReductionOracle && !law.has_phi()) {
    throw ConfigError("reduction oracle requires a law with f = f(rho); '" + law.id +
                      "' depends on v");
  }
}

Tendency StiffOperator::apply(const State& s) const {
  Tendency t = Tendency::zero_like(s);
  switch (kind) {
    case Kind::None:
      return t;
    case Kind::ProjectionPenalty:
      t.v = gradient_part(s.v);
      t.v *= -1.0 / eps;
      return t;
    case Kind::AcousticPair: {
      if (!s.p_tilde) throw PreconditionError("acoustic operator needs a p_tilde block");
      ScalarField div = divergence(s.v);
      div *= -1.0 / eps;
      t.p_tilde = std::move(div);
      t.v = gradient(*s.p_tilde);
      t.v *= -1.0 / eps;
      return t;
    }
  }
  throw PreconditionError("unknown stiff operator");
}

Tendency SplitTendency::total(const State& s) const {
  Tendency t = nonstiff;
  t += stiff.apply(s);
  return t;
}

Tendency rhs_scheme_a(const State& state, const PressureLaw& law, double eps,
                      MollifierKind mollifier) {
  const double div = rms(divergence(state.v));
  if (div > 1e-8) {
    throw PreconditionError(
        fmt::format("scheme a: velocity must be divergence-free, rms(div v) = {:.3e}", div));
  }
  const detail::Mollification moll{eps, mollifier};
  auto terms =
      detail::advective_terms(state, law, moll, detail::DensityForm::Transport, false);
  mollify_in_place(terms.rho, eps, mollifier);
  for (auto& c : terms.v) mollify_in_place(c, eps, mollifier);
  leray_project_in_place(terms.v);
  Tendency t{transform_inverse(terms.rho), transform_inverse(terms.v), std::nullopt};
  if (state.p_tilde) t.p_tilde = ScalarField(state.grid());
  return t;
}

SplitTendency rhs_scheme_b(const State& state, const PressureLaw& law, double eps,
                           MollifierKind mollifier, bool literal_sandwich) {
  const detail::Mollification moll{eps, mollifier};
  auto terms = detail::advective_terms(state, law, moll, detail::DensityForm::Transport,
                                       literal_sandwich);
  if (!terms.rho_outer_mollified) mollify_in_place(terms.rho, eps, mollifier);
  // The velocity rows of A0 are the identity, so the sandwich cancels there.
  for (auto& c : terms.v) mollify_in_place(c, eps, mollifier);
  Tendency t{transform_inverse(terms.rho), transform_inverse(terms.v), std::nullopt};
  if (state.p_tilde) t.p_tilde = ScalarField(state.grid());
  return {std::move(t), StiffOperator{StiffOperator::Kind::ProjectionPenalty, eps}};
}

VectorField penalty_pressure_gradient(const VectorField& v, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("penalty_pressure_gradient: eps must be positive");
  VectorField g = gradient_part(v);
  g *= 1.0 / eps;
  return g;
}

SplitTendency rhs_scheme_c_split(const State& state, const PressureLaw& law, double eps) {
  if (!state.p_tilde) throw PreconditionError("scheme c: state has no p_tilde block");
  if (!(eps > 0.0)) throw PreconditionError("scheme c: eps must be positive");
  auto terms =
      detail::advective_terms(state, law, std::nullopt, detail::DensityForm::Conservative);
  Tendency t{transform_inverse(terms.rho), transform_inverse(terms.v),
             ScalarField(state.grid())};
  return {std::move(t), StiffOperator{StiffOperator::Kind::AcousticPair, eps}};
}

Tendency rhs_scheme_c(const State& state, const PressureLaw& law, double eps) {
  return rhs_scheme_c_split(state, law, eps).total(state);
}

Tendency reduction_oracle_rhs(const State& state, const PressureLaw& law) {
  if (!law.has_phi()) {
    throw PreconditionError("reduction oracle: law '" + law.id + "' has no phi(rho)");
  }
  auto terms = detail::advective_terms(state, zero_law(), std::nullopt,
                                       detail::DensityForm::Transport);
  leray_project_in_place(terms.v);
  Tendency t{transform_inverse(terms.rho), transform_inverse(terms.v), std::nullopt};
  if (state.p_tilde) t.p_tilde = ScalarField(state.grid());
  return t;
}

ScalarField oracle_pressure(const State& state, const PressureLaw& law) {
  ScalarField q = recover_pressure(state, zero_law());
  q -= law.evaluate_phi(state.density());
  return q;
}

VectorField slightly_compressible_init(const VectorField& v0, const VectorField& v0_1,
                                       double eps) {
  require_same_grid(v0.grid(), v0_1.grid(), "slightly_compressible_init");
  if (!(eps >= 0.0)) throw PreconditionError("slightly_compressible_init: eps must be >= 0");
  const double div = rms(divergence(v0));
  if (div > 1e-10) {
    throw PreconditionError(
        fmt::format("slightly_compressible_init: v0 not divergence-free (rms {:.3e})", div));
  }
  VectorField out = v0;
  out.axpy(eps, v0_1);
  return out;
}

StiffOperator stiff_operator(const SchemeConfig& config) {
  switch (config.kind) {
    case SchemeKind::ContinuousProjection:
      return {StiffOperator::Kind::ProjectionPenalty, config.eps};
    case SchemeKind::ArtificialCompressibility:
      return {StiffOperator::Kind::AcousticPair, config.eps};
    default:
      return {};
  }
}

SplitTendency evaluate_scheme(const SchemeConfig& config, const State& state,
                              const PressureLaw& law) {
  switch (config.kind) {
    case SchemeKind::MollifiedProjected:
      return {rhs_scheme_a(state, law, config.eps, config.mollifier), {}};
    case SchemeKind::ContinuousProjection:
      return rhs_scheme_b(state, law, config.eps, config.mollifier, config.literal_sandwich);
    case SchemeKind::ArtificialCompressibility:
      return rhs_scheme_c_split(state, law, config.eps);
    case SchemeKind::ReductionOracle:
      return {reduction_oracle_rhs(state, law), {}};
  }
  throw ConfigError("unknown scheme kind");
}

}  // namespace cif
