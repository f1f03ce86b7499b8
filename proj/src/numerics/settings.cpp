#include "cvq/numerics/settings.hpp"

#include <algorithm>
#include <cmath>

namespace cvq {

double default_half_extent(double max_abs_squeeze) {
  return 8.0 * std::max(1.0, std::exp(std::abs(max_abs_squeeze))) + 4.0;
}

QGrid default_grid(double max_abs_squeeze, const NumericsConfig& cfg) {
  const double half = cfg.half_extent > 0.0 ? cfg.half_extent : default_half_extent(max_abs_squeeze);
  return QGrid(half, cfg.grid_points);
}

QGrid doubled(const QGrid& grid) {
  const std::size_t m = grid.size();
  return QGrid(grid.half_extent() * static_cast<double>(2 * m - 1) / static_cast<double>(m - 1),
               2 * m);
}

}  // namespace cvq
