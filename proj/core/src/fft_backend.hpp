#pragma once

#include <complex>

#include "cif/grid.hpp"

namespace cif::detail {

// 2-D complex transforms on n x n row-major arrays. Forward is scaled by
// 1/n^2; inverse is unscaled and keeps only the real part. Both are safe to
// call concurrently; plans are created once per n under a lock.
void fft2_forward(const Grid& grid, const double* in, std::complex<double>* out);
void fft2_inverse(const Grid& grid, const std::complex<double>* in, double* out);

}  // namespace cif::detail
