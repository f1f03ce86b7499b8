#pragma once

#include <cstddef>

#include "cvq/numerics/grid.hpp"

namespace cvq {

struct NumericsConfig {
  std::size_t grid_points = 8192;
  // 0 selects the squeeze-dependent default below.
  double half_extent = 0.0;
  std::size_t fock_cutoff = 120;
  std::size_t fock_guard = 24;
};

// L = 8 max(1, e^{|r|}) + 4 unless the config pins L.
double default_half_extent(double max_abs_squeeze);
QGrid default_grid(double max_abs_squeeze, const NumericsConfig& cfg = {});

// Same resolution, twice the extent and point count.
QGrid doubled(const QGrid& grid);

}  // namespace cvq
