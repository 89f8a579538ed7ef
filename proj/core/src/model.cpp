#include "cif/model.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "cif/errors.hpp"
#include "transport_kernel.hpp"

namespace cif {
namespace detail {
namespace {

SpectralCoefficients dealiased_forward(const ScalarField& f) {
  auto c = transform_forward(f);
  dealias_in_place(c);
  return c;
}

}  // namespace

SpectralTendency advective_terms(const State& state, const PressureLaw& law,
                                 const std::optional<Mollification>& moll, DensityForm form,
                                 bool literal_sandwich) {
  const Grid& g = state.grid();
  require_same_grid(g, state.v.grid(), "advective_terms");

  auto rho_hat = transform_forward(state.rho_tilde);
  auto v_hat = transform_forward(state.v);
  if (moll) {
    mollify_in_place(rho_hat, moll->eps, moll->kind);
    for (auto& c : v_hat) mollify_in_place(c, moll->eps, moll->kind);
  }

  const ScalarField rho_m = transform_inverse(rho_hat);
  const VectorField v_c = transform_inverse(v_hat);
  const VectorField grad_rho(transform_inverse(differentiate(rho_hat, 0)),
                             transform_inverse(differentiate(rho_hat, 1)));
  std::array<VectorField, kDim> grad_v{
      VectorField(transform_inverse(differentiate(v_hat[0], 0)),
                  transform_inverse(differentiate(v_hat[0], 1))),
      VectorField(transform_inverse(differentiate(v_hat[1], 0)),
                  transform_inverse(differentiate(v_hat[1], 1)))};

  ScalarField rho_c = rho_m;
  for (auto& r : rho_c.values()) r += state.rho_bar;
  require_positive_density(rho_c, moll ? "mollified density" : "density");
  const ScalarField f = law.evaluate(rho_c, v_c);

  const std::size_t size = g.size();
  ScalarField adv_rho(g);
  VectorField adv_v(g);
  for (std::size_t i = 0; i < size; ++i) {
    const double a = v_c[0][i];
    const double b = v_c[1][i];
    adv_rho[i] = -(a * grad_rho[0][i] + b * grad_rho[1][i]);
    for (std::size_t k = 0; k < kDim; ++k) {
      adv_v[k][i] = -(a * grad_v[k][0][i] + b * grad_v[k][1][i]) - f[i] * grad_rho[k][i];
    }
  }

  SpectralTendency out{SpectralCoefficients(g),
                       {dealiased_forward(adv_v[0]), dealiased_forward(adv_v[1])},
                       false};

  if (form == DensityForm::Conservative) {
    const VectorField flux(hadamard(rho_c, v_c[0]), hadamard(rho_c, v_c[1]));
    SpectralVector flux_hat{dealiased_forward(flux[0]), dealiased_forward(flux[1])};
    out.rho = divergence(flux_hat);
    for (auto& c : out.rho.data()) c = -c;
  } else if (literal_sandwich && moll) {
    // -(rho_c / f) J [ (f / rho_c) v_c . grad(J rho~) ]
    ScalarField weighted(g);
    for (std::size_t i = 0; i < size; ++i) weighted[i] = f[i] / rho_c[i] * adv_rho[i];
    auto w_hat = dealiased_forward(weighted);
    mollify_in_place(w_hat, moll->eps, moll->kind);
    ScalarField back = transform_inverse(w_hat);
    for (std::size_t i = 0; i < size; ++i) back[i] *= rho_c[i] / f[i];
    out.rho = dealiased_forward(back);
    out.rho_outer_mollified = true;
  } else {
    out.rho = dealiased_forward(adv_rho);
  }
  return out;
}

}  // namespace detail

Tendency advective_rhs(const State& state, const PressureLaw& law) {
  auto terms = detail::advective_terms(state, law, std::nullopt, detail::DensityForm::Transport);
  Tendency t{transform_inverse(terms.rho), transform_inverse(terms.v), std::nullopt};
  if (state.p_tilde) t.p_tilde = ScalarField(state.grid());
  return t;
}

ScalarField recover_pressure(const State& state, const PressureLaw& law) {
  const double div = rms(divergence(state.v));
  if (div > 1e-6) {
    spdlog::warn("recover_pressure: velocity divergence {:.3e} exceeds 1e-6", div);
  }
  auto terms = detail::advective_terms(state, law, std::nullopt, detail::DensityForm::Transport);
  // laplacian(P) = div(N) where N = -(v.grad)v - f grad rho.
  return inverse_laplacian(transform_inverse(divergence(terms.v)));
}

double pressure_residual(const ScalarField& pressure, const State& state,
                         const PressureLaw& law) {
  // Right-hand side -div((v.grad)v) - div(f grad rho), assembled in
  // physical space from separately dealiased products.
  const Grid& g = state.grid();
  const ScalarField rho = state.density();
  const ScalarField f = law.evaluate(rho, state.v);
  const VectorField grad_rho = gradient(state.rho_tilde);
  const VectorField gv0 = gradient(state.v[0]);
  const VectorField gv1 = gradient(state.v[1]);
  VectorField flux(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double a = state.v[0][i];
    const double b = state.v[1][i];
    flux[0][i] = a * gv0[0][i] + b * gv0[1][i] + f[i] * grad_rho[0][i];
    flux[1][i] = a * gv1[0][i] + b * gv1[1][i] + f[i] * grad_rho[1][i];
  }
  ScalarField rhs = divergence(dealias(flux));
  rhs *= -1.0;
  ScalarField lap = laplacian(pressure);
  const double mean = rhs.mean();
  for (auto& r : rhs.values()) r -= mean;
  return rms(lap - rhs);
}

Tendency block_project(const Tendency& t) {
  Tendency out = t;
  out.v = leray_project(t.v);
  return out;
}

Tendency apply_symmetrizer(const Tendency& t, const State& at, const PressureLaw& law) {
  const ScalarField rho = at.density();
  const ScalarField f = law.evaluate(rho, at.v);
  Tendency out = t;
  for (std::size_t i = 0; i < out.rho_tilde.size(); ++i) out.rho_tilde[i] *= f[i] / rho[i];
  return out;
}

}  // namespace cif
