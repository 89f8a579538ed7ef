#pragma once

#include <optional>
#include <string_view>

#include "cif/model.hpp"

namespace cif {

enum class SchemeKind {
  MollifiedProjected,         // "a": projected, mollified transport system
  ContinuousProjection,       // "b": penalty -(I - P) v / eps
  ArtificialCompressibility,  // "c": eps^2 d_t P + div v = 0
  ReductionOracle,            // incompressible Euler + passive transport, f = f(rho)
};

std::string_view to_string(SchemeKind kind) noexcept;
/// Accepts a, b, c, oracle. Throws ConfigError otherwise.
SchemeKind parse_scheme_kind(std::string_view name);

struct SchemeConfig {
  SchemeKind kind = SchemeKind::MollifiedProjected;
  double eps = 1e-6;
  MollifierKind mollifier = MollifierKind::gaussian();
  /// Compressible perturbation of the initial velocity (schemes b, c).
  std::optional<VectorField> v0_1;
  /// Initial P~ for scheme c; zero when absent.
  std::optional<ScalarField> p_tilde_0;
  /// Scheme b: evaluate the A0^{-1} J A0 sandwich literally instead of
  /// relying on its cancellation.
  bool literal_sandwich = false;

  /// Throws ConfigError for eps <= 0 or a reduction oracle without phi.
  void validate(const PressureLaw& law) const;
};

/// Linear eps-singular operator that the integrator applies exactly.
struct StiffOperator {
  enum class Kind { None, ProjectionPenalty, AcousticPair };
  Kind kind = Kind::None;
  double eps = 1.0;

  /// The tendency the operator contributes at `s`.
  Tendency apply(const State& s) const;
};

struct SplitTendency {
  Tendency nonstiff;
  StiffOperator stiff;

  /// nonstiff + stiff.apply(s)
  Tendency total(const State& s) const;
};

/// -P J [ (J v . grad) J rho~ , (J v . grad) J v + f(J(u~ + u_bar)) grad J rho~ ]
/// with P the block projector. Requires rms(div v) <= 1e-8.
Tendency rhs_scheme_a(const State& state, const PressureLaw& law, double eps,
                      MollifierKind mollifier);

/// Nonstiff part -A0^{-1} J [A0 A_j(J(u~ + u_bar)) d_j J u~] (transport form)
/// and the penalty v -> -(I - P) v / eps.
SplitTendency rhs_scheme_b(const State& state, const PressureLaw& law, double eps,
                           MollifierKind mollifier, bool literal_sandwich = false);

/// grad P^eps = (I - P) v / eps reconstructed from the Hodge split.
VectorField penalty_pressure_gradient(const VectorField& v, double eps);

/// Full artificial-compressibility tendency:
///   rho~' = -div(rho v), P~' = -div(v) / eps,
///   v' = -(v . grad) v - f grad rho~ - grad(P~) / eps.
Tendency rhs_scheme_c(const State& state, const PressureLaw& law, double eps);
/// Same, with the constant-coefficient acoustic part split off.
SplitTendency rhs_scheme_c_split(const State& state, const PressureLaw& law, double eps);

/// v' = -P[(v . grad) v], rho~' = -v . grad rho~. Throws PreconditionError
/// when the law has no phi.
Tendency reduction_oracle_rhs(const State& state, const PressureLaw& law);
/// Incompressible pressure of the reduced system: Q - phi(rho), with Q the
/// zero-mean pressure of the homogeneous Euler flow.
ScalarField oracle_pressure(const State& state, const PressureLaw& law);

/// v0 + eps * v0_1. Throws PreconditionError if rms(div v0) > 1e-10 or eps < 0.
VectorField slightly_compressible_init(const VectorField& v0, const VectorField& v0_1,
                                       double eps);

/// The exactly-integrated operator of a scheme (None for a and oracle).
StiffOperator stiff_operator(const SchemeConfig& config);

/// Dispatches on config.kind; schemes a and oracle return a None operator.
SplitTendency evaluate_scheme(const SchemeConfig& config, const State& state,
                              const PressureLaw& law);

}  // namespace cif
