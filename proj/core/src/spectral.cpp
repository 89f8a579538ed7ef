#include "cif/spectral.hpp"

#include <cmath>
#include <string>

#include "cif/errors.hpp"
#include "fft_backend.hpp"

namespace cif {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

template <class Fn>
void for_each_mode(const Grid& grid, Fn&& fn) {
  const std::size_t n = grid.n();
  for (std::size_t jy = 0; jy < n; ++jy) {
    for (std::size_t jx = 0; jx < n; ++jx) fn(jx, jy, jy * n + jx);
  }
}

void require_positive_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw PreconditionError("mollify: eps must be positive, got " + std::to_string(eps));
  }
}

}  // namespace

SpectralCoefficients transform_forward(const ScalarField& field) {
  SpectralCoefficients out(field.grid());
  detail::fft2_forward(field.grid(), field.values().data(), out.data().data());
  return out;
}

ScalarField transform_inverse(const SpectralCoefficients& coeffs) {
  ScalarField out(coeffs.grid());
  detail::fft2_inverse(coeffs.grid(), coeffs.data().data(), out.values().data());
  return out;
}

SpectralVector transform_forward(const VectorField& v) {
  return {transform_forward(v[0]), transform_forward(v[1])};
}

VectorField transform_inverse(const SpectralVector& coeffs) {
  return VectorField(transform_inverse(coeffs[0]), transform_inverse(coeffs[1]));
}

SpectralCoefficients differentiate(const SpectralCoefficients& c, std::size_t axis) {
  const Grid& g = c.grid();
  SpectralCoefficients out(g);
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double k = g.derivative_wavenumber(axis == 0 ? jx : jy);
    out[i] = kI * k * c[i];
  });
  return out;
}

SpectralCoefficients divergence(const SpectralVector& v) {
  const Grid& g = v[0].grid();
  require_same_grid(g, v[1].grid(), "divergence");
  SpectralCoefficients out(g);
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    out[i] = kI * (g.derivative_wavenumber(jx) * v[0][i] + g.derivative_wavenumber(jy) * v[1][i]);
  });
  return out;
}

void leray_project_in_place(SpectralVector& v) {
  const Grid& g = v[0].grid();
  require_same_grid(g, v[1].grid(), "leray_project");
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double kx = g.derivative_wavenumber(jx);
    const double ky = g.derivative_wavenumber(jy);
    const double k2 = kx * kx + ky * ky;
    if (k2 == 0.0) return;
    const std::complex<double> kdotv = (kx * v[0][i] + ky * v[1][i]) / k2;
    v[0][i] -= kx * kdotv;
    v[1][i] -= ky * kdotv;
  });
}

void mollify_in_place(SpectralCoefficients& c, double eps, MollifierKind kind) {
  require_positive_eps(eps);
  const Grid& g = c.grid();
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double kx = g.wavenumber(jx);
    const double ky = g.wavenumber(jy);
    c[i] *= kind.multiplier(eps, std::sqrt(kx * kx + ky * ky));
  });
}

bool dealias_keeps(const Grid& grid, std::size_t j) noexcept {
  const long m = grid.mode(j);
  return 3 * std::abs(m) <= static_cast<long>(grid.n());
}

void dealias_in_place(SpectralCoefficients& c) {
  const Grid& g = c.grid();
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    if (!dealias_keeps(g, jx) || !dealias_keeps(g, jy)) c[i] = 0.0;
  });
}

VectorField gradient(const ScalarField& field) {
  const auto c = transform_forward(field);
  return VectorField(transform_inverse(differentiate(c, 0)),
                     transform_inverse(differentiate(c, 1)));
}

ScalarField divergence(const VectorField& v) {
  return transform_inverse(divergence(transform_forward(v)));
}

ScalarField laplacian(const ScalarField& field) {
  auto c = transform_forward(field);
  const Grid& g = field.grid();
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double kx = g.derivative_wavenumber(jx);
    const double ky = g.derivative_wavenumber(jy);
    c[i] *= -(kx * kx + ky * ky);
  });
  return transform_inverse(c);
}

ScalarField inverse_laplacian(const ScalarField& rhs) {
  auto c = transform_forward(rhs);
  const Grid& g = rhs.grid();
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double kx = g.derivative_wavenumber(jx);
    const double ky = g.derivative_wavenumber(jy);
    const double k2 = kx * kx + ky * ky;
    c[i] = k2 == 0.0 ? std::complex<double>(0.0) : c[i] / (-k2);
  });
  return transform_inverse(c);
}

VectorField leray_project(const VectorField& v) {
  auto c = transform_forward(v);
  leray_project_in_place(c);
  return transform_inverse(c);
}

VectorField gradient_part(const VectorField& v) { return v - leray_project(v); }

double MollifierKind::multiplier(double eps, double xi_norm) const noexcept {
  switch (kind) {
    case Kind::Gaussian:
      return std::exp(-eps * eps * xi_norm * xi_norm);
    case Kind::SharpCutoff:
      return eps * xi_norm <= 1.0 ? 1.0 : 0.0;
  }
  return 1.0;
}

std::string_view to_string(MollifierKind::Kind kind) noexcept {
  return kind == MollifierKind::Kind::Gaussian ? "gaussian" : "sharp";
}

MollifierKind parse_mollifier(std::string_view name) {
  if (name == "gaussian") return MollifierKind::gaussian();
  if (name == "sharp" || name == "sharp_cutoff") return MollifierKind::sharp_cutoff();
  throw PreconditionError("unknown mollifier '" + std::string(name) +
                          "' (expected gaussian or sharp)");
}

ScalarField mollify(const ScalarField& field, double eps, MollifierKind kind) {
  require_positive_eps(eps);
  auto c = transform_forward(field);
  mollify_in_place(c, eps, kind);
  return transform_inverse(c);
}

VectorField mollify(const VectorField& v, double eps, MollifierKind kind) {
  return VectorField(mollify(v[0], eps, kind), mollify(v[1], eps, kind));
}

double sobolev_norm(const ScalarField& field, double s) {
  if (!(s >= 0.0)) throw PreconditionError("sobolev_norm: s must be nonnegative");
  const auto c = transform_forward(field);
  const Grid& g = field.grid();
  double acc = 0.0;
  for_each_mode(g, [&](std::size_t jx, std::size_t jy, std::size_t i) {
    const double kx = g.wavenumber(jx);
    const double ky = g.wavenumber(jy);
    acc += std::pow(1.0 + kx * kx + ky * ky, s) * std::norm(c[i]);
  });
  return std::sqrt(acc);
}

double sobolev_norm(const VectorField& v, double s) {
  const double a = sobolev_norm(v[0], s);
  const double b = sobolev_norm(v[1], s);
  return std::sqrt(a * a + b * b);
}

SpectralCoefficients dealias(SpectralCoefficients coeffs) {
  dealias_in_place(coeffs);
  return coeffs;
}

ScalarField dealias(const ScalarField& field) {
  return transform_inverse(dealias(transform_forward(field)));
}

VectorField dealias(const VectorField& v) { return VectorField(dealias(v[0]), dealias(v[1])); }

}  // namespace cif
