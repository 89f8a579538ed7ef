#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cif/errors.hpp"
#include "cif/spectral.hpp"
#include "test_support.hpp"

using namespace cif;
using doctest::Approx;

namespace {

ScalarField sin_x(const Grid& g) {
  return ScalarField::from_function(g, [](double x, double) { return std::sin(x); });
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs(); }

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("rejects odd or small sizes") {
    CHECK_THROWS_AS(Grid(7), PreconditionError);
    CHECK_THROWS_AS(Grid(63), PreconditionError);
    CHECK_THROWS_AS(Grid(6), PreconditionError);
    CHECK_NOTHROW(Grid(8));
  }

  TEST_CASE("wavenumbers are symmetric except at Nyquist") {
    const Grid g(16);
    for (std::size_t j = 1; j < g.n(); ++j) {
      if (g.is_nyquist(j)) {
        CHECK(g.derivative_wavenumber(j) == 0.0);
        continue;
      }
      CHECK(g.wavenumber(j) == -g.wavenumber(g.n() - j));
    }
    CHECK(g.mode(g.n() / 2) == -static_cast<long>(g.n() / 2));
  }

  TEST_CASE("spacing and coordinates") {
    const Grid g(32, 4.0);
    CHECK(g.dx() == Approx(0.125));
    CHECK(g.x(8) == Approx(1.0));
    CHECK(g.k0() == Approx(std::numbers::pi / 2));
  }
}

TEST_SUITE("field") {
  TEST_CASE("grids must match") {
    ScalarField a(Grid(8));
    ScalarField b(Grid(16));
    CHECK_THROWS_AS(a += b, DimensionMismatch);
  }

  TEST_CASE("reductions") {
    const Grid g(8);
    ScalarField f(g, 2.0);
    f[3] = -5.0;
    CHECK(f.min() == -5.0);
    CHECK(f.max() == 2.0);
    CHECK(f.max_abs() == 5.0);
    CHECK(f.all_finite());
    f[0] = std::nan("");
    CHECK_FALSE(f.all_finite());
  }
}

TEST_SUITE("transforms") {
  TEST_CASE("constant field has only the zero mode") {
    const Grid g(16);
    const auto c = transform_forward(ScalarField(g, 3.5));
    CHECK(c[0].real() == Approx(3.5));
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-14);
  }

  TEST_CASE("sin x has two conjugate modes at +-1") {
    const Grid g(16);
    const auto c = transform_forward(sin_x(g));
    // sin x = (e^{ix} - e^{-ix}) / 2i
    CHECK(c.at(1, 0).imag() == Approx(-0.5));
    CHECK(c.at(g.n() - 1, 0).imag() == Approx(0.5));
    double rest = 0.0;
    for (std::size_t jy = 0; jy < g.n(); ++jy) {
      for (std::size_t jx = 0; jx < g.n(); ++jx) {
        if (jy == 0 && (jx == 1 || jx == g.n() - 1)) continue;
        rest = std::max(rest, std::abs(c.at(jx, jy)));
      }
    }
    CHECK(rest < 1e-14);
  }

  TEST_CASE("FFT agrees with the direct DFT") {
    test::Rng rng(1);
    const Grid g(8);
    ScalarField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = test::uniform(rng, -1, 1);
    const auto fast = transform_forward(f);
    const auto slow = test::direct_dft(f);
    for (std::size_t i = 0; i < slow.size(); ++i) CHECK(std::abs(fast[i] - slow[i]) < 1e-14);
  }

  TEST_CASE("round trip of a random field") {
    test::Rng rng(2);
    const Grid g(32);
    ScalarField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = test::uniform(rng, -1, 1);
    CHECK(max_abs_diff(transform_inverse(transform_forward(f)), f) < 1e-12);
  }
}

TEST_SUITE("differential operators") {
  const Grid g(32);

  TEST_CASE("gradient of sin x") {
    const VectorField grad = gradient(sin_x(g));
    const auto cos_x = ScalarField::from_function(g, [](double x, double) { return std::cos(x); });
    CHECK(max_abs_diff(grad[0], cos_x) < 1e-13);
    CHECK(grad[1].max_abs() < 1e-13);
  }

  TEST_CASE("divergence of a shear is zero") {
    const auto v = VectorField::from_function(
        g, [](double, double y) -> std::array<double, 2> { return {std::sin(y), 0.0}; });
    CHECK(divergence(v).max_abs() < 1e-13);
  }

  TEST_CASE("div grad sin x = -sin x") {
    const ScalarField s = sin_x(g);
    ScalarField minus = s;
    minus *= -1.0;
    CHECK(max_abs_diff(divergence(gradient(s)), minus) < 1e-13);
    CHECK(max_abs_diff(laplacian(s), minus) < 1e-13);
  }

  TEST_CASE("inverse laplacian returns the zero-mean solution") {
    test::Rng rng(3);
    ScalarField rhs = test::random_smooth_field(g, rng, 6);
    const double m = rhs.mean();
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= m;
    const ScalarField phi = inverse_laplacian(rhs);
    CHECK(std::abs(phi.mean()) < 1e-14);
    CHECK(max_abs_diff(laplacian(phi), rhs) < 1e-11);
  }
}

TEST_SUITE("leray") {
  const Grid g(32);

  TEST_CASE("constant field is unchanged") {
    const VectorField v(ScalarField(g, 0.3), ScalarField(g, -1.2));
    CHECK(rms(leray_project(v) - v) < 1e-15);
  }

  TEST_CASE("pure gradient is removed") {
    const VectorField v = gradient(sin_x(g));
    CHECK(rms(leray_project(v)) < 1e-14);
  }

  TEST_CASE("divergence-free shear is unchanged") {
    const auto v = VectorField::from_function(
        g, [](double, double y) -> std::array<double, 2> { return {std::sin(y), 0.0}; });
    CHECK(rms(leray_project(v) - v) < 1e-14);
  }

  TEST_CASE("agrees with the direct-DFT projector") {
    test::Rng rng(4);
    const Grid small(8);
    VectorField v(small);
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < small.size(); ++i) v[j][i] = test::uniform(rng, -1, 1);
    }
    CHECK(rms(leray_project(v) - test::direct_leray(v)) < 1e-13);
  }

  TEST_CASE("gradient part completes the split") {
    test::Rng rng(5);
    const VectorField v = test::random_smooth_vector(g, rng);
    CHECK(rms(leray_project(v) + gradient_part(v) - v) < 1e-14);
  }
}

TEST_SUITE("mollifier") {
  const Grid g(32);

  TEST_CASE("multiplier properties") {
    for (auto kind : {MollifierKind::gaussian(), MollifierKind::sharp_cutoff()}) {
      CHECK(kind.multiplier(0.3, 0.0) == 1.0);
      double prev = 1.0;
      for (double k = 0.0; k < 40.0; k += 0.25) {
        const double m = kind.multiplier(0.3, k);
        CHECK(m <= 1.0);
        CHECK(m >= 0.0);
        CHECK(m <= prev);
        prev = m;
      }
    }
  }

  TEST_CASE("constant is unchanged") {
    const ScalarField c(g, 2.5);
    CHECK(max_abs_diff(mollify(c, 0.7, MollifierKind::gaussian()), c) < 1e-14);
  }

  TEST_CASE("gaussian on sin x scales by exp(-eps^2)") {
    ScalarField expected = sin_x(g);
    expected *= std::exp(-0.25);
    CHECK(max_abs_diff(mollify(sin_x(g), 0.5, MollifierKind::gaussian()), expected) < 1e-14);
  }

  TEST_CASE("tends to the identity as eps -> 0") {
    test::Rng rng(6);
    const ScalarField f = test::random_smooth_field(g, rng);
    CHECK(max_abs_diff(mollify(f, 1e-6, MollifierKind::gaussian()), f) < 1e-8);
    CHECK(max_abs_diff(mollify(f, 1e-6, MollifierKind::sharp_cutoff()), f) < 1e-12);
  }

  TEST_CASE("sharp cutoff removes modes above 1/eps") {
    const auto f = ScalarField::from_function(g, [](double x, double) { return std::sin(x) + std::sin(5 * x); });
    const ScalarField m = mollify(f, 0.25, MollifierKind::sharp_cutoff());
    CHECK(max_abs_diff(m, sin_x(g)) < 1e-14);
  }

  TEST_CASE("eps must be positive") {
    CHECK_THROWS_AS(mollify(sin_x(g), 0.0, MollifierKind::gaussian()), PreconditionError);
    CHECK_THROWS_AS(parse_mollifier("box"), PreconditionError);
    CHECK(parse_mollifier("sharp").kind == MollifierKind::Kind::SharpCutoff);
  }
}

TEST_SUITE("sobolev") {
  const Grid g(32);

  TEST_CASE("constant, s = 0") { CHECK(sobolev_norm(ScalarField(g, -3.0), 0.0) == Approx(3.0)); }

  TEST_CASE("sin x, s = 0 and s = 1") {
    CHECK(sobolev_norm(sin_x(g), 0.0) == Approx(1.0 / std::sqrt(2.0)));
    CHECK(sobolev_norm(sin_x(g), 1.0) == Approx(1.0));
  }

  TEST_CASE("monotone in s") {
    test::Rng rng(7);
    const ScalarField f = test::random_smooth_field(g, rng);
    double prev = 0.0;
    for (double s : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      const double n = sobolev_norm(f, s);
      CHECK(n >= prev);
      prev = n;
    }
  }
}

TEST_SUITE("dealias") {
  TEST_CASE("low modes survive, Nyquist is removed, idempotent") {
    const Grid g(64);
    const ScalarField s = sin_x(g);
    CHECK(max_abs_diff(dealias(s), s) < 1e-14);

    SpectralCoefficients c(g);
    c.at(g.n() / 2, 0) = 1.0;
    c.at(3, 5) = 2.0;
    const auto d = dealias(c);
    CHECK(d.at(g.n() / 2, 0) == std::complex<double>(0.0));
    CHECK(d.at(3, 5) == std::complex<double>(2.0));
    CHECK(dealias(d).data() == d.data());
    CHECK(dealias_keeps(g, 21));
    CHECK_FALSE(dealias_keeps(g, 22));
  }
}
