#pragma once

#include <span>
#include <vector>

#include "cvq/numerics/grid.hpp"

namespace cvq {

// Composite Simpson weights for M uniformly spaced points. An odd interval
// count closes with the 3/8 rule; the result is averaged with its mirror image
// so that w_k == w_{M-1-k}.
std::vector<double> simpson_weights(std::size_t point_count, double step);

// Integral of the sampled function over the grid.
cplx integrate(std::span<const cplx> values, const QGrid& grid);
double integrate(std::span<const double> values, const QGrid& grid);

// integral conj(a) b dq
cplx inner_product(const PositionWave& a, const PositionWave& b);

}  // namespace cvq
