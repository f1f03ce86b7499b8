#pragma once

#include <vector>

#include "cvq/numerics/grid.hpp"

namespace cvq {

struct WignerGrid {
  std::vector<double> q_axis;
  std::vector<double> p_axis;
  // row-major, values[i * p_axis.size() + j] = W(q_i, p_j)
  std::vector<double> values;
  // largest |Im W| seen before it was dropped
  double imag_residue = 0.0;

  double at(std::size_t i, std::size_t j) const { return values[i * p_axis.size() + j]; }
  double min() const;
  // Simpson over both axes.
  double integral() const;
  // integral W(q_i, p) dp
  std::vector<double> q_marginal() const;
};

struct WignerOptions {
  // Lattice step for the y integral; 0 picks min(input step * 4, 0.02)
  // rounded so that the q axis lies on the lattice.
  double y_step = 0.0;
};

// W(q,p) = (1/pi) integral phi*(q+y) phi(q-y) e^{2ipy} dy. The q axis must be
// uniform; p points are arbitrary.
WignerGrid wigner(const PositionWave& wave, const std::vector<double>& q_points,
                  const std::vector<double>& p_points, const WignerOptions& opt = {});

std::vector<double> uniform_axis(double lo, double hi, std::size_t count);

}  // namespace cvq
