#include "vvl/spectral/grid.hpp"

#include <stdexcept>
#include <string>

namespace vvl {

Grid::Grid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("grid size must be even and >= 8, got " + std::to_string(n));
  }
}

}  // namespace vvl
