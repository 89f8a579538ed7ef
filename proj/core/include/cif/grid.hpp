#pragma once

#include <cstddef>
#include <numbers>

namespace cif {

/// Spatial dimension. The matrix layouts in symbol.hpp are written for
/// general d; fields and transforms are two-dimensional.
inline constexpr std::size_t kDim = 2;

/// Uniform periodic grid on [0, length)^2 with n nodes per axis.
///
/// Node (ix, iy) sits at (ix * dx, iy * dx) and is stored at iy * n + ix.
/// Spectral arrays use the same layout with FFT index order along each axis.
class Grid {
 public:
  /// Throws PreconditionError unless n is even and n >= 8, length > 0.
  explicit Grid(std::size_t n, double length = 2.0 * std::numbers::pi);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ * n_; }
  double length() const noexcept { return length_; }
  double dx() const noexcept { return length_ / static_cast<double>(n_); }
  double k0() const noexcept { return 2.0 * std::numbers::pi / length_; }

  /// Signed integer frequency of FFT index j: 0..n/2-1, then -n/2..-1.
  long mode(std::size_t j) const noexcept {
    const long jj = static_cast<long>(j);
    const long nn = static_cast<long>(n_);
    return jj < nn / 2 ? jj : jj - nn;
  }
  bool is_nyquist(std::size_t j) const noexcept { return j == n_ / 2; }

  /// Physical wavenumber k0 * mode(j) (Nyquist reported as -n/2 * k0).
  double wavenumber(std::size_t j) const noexcept {
    return k0() * static_cast<double>(mode(j));
  }
  /// Wavenumber used by first derivatives; zero at Nyquist so that
  /// derivatives of real fields stay real. Every multiplier built from
  /// derivatives (divergence, Laplacian, Leray) uses this one.
  double derivative_wavenumber(std::size_t j) const noexcept {
    return is_nyquist(j) ? 0.0 : wavenumber(j);
  }

  double x(std::size_t ix) const noexcept { return static_cast<double>(ix) * dx(); }
  double y(std::size_t iy) const noexcept { return static_cast<double>(iy) * dx(); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t n_;
  double length_;
};

}  // namespace cif
