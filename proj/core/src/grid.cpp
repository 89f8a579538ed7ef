#include "cif/grid.hpp"

#include <cmath>
#include <string>

#include "cif/errors.hpp"

namespace cif {

Grid::Grid(std::size_t n, double length) : n_(n), length_(length) {
  if (n < 8 || n % 2 != 0) {
    throw PreconditionError("grid: n must be even >= 8, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw PreconditionError("grid: length must be positive and finite");
  }
}

}  // namespace cif
