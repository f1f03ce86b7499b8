#include "cvq/numerics/quadrature.hpp"

#include "cvq/error.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq {

std::vector<double> simpson_weights(std::size_t point_count, double step) {
  if (point_count < 2) throw ContractError("simpson_weights: need at least two points");
  const std::size_t intervals = point_count - 1;
  std::vector<double> w(point_count, 0.0);
  if (intervals == 1) {
    w[0] = w[1] = step / 2.0;
    return w;
  }
  auto add_third = [&](std::size_t first, std::size_t last) {
    for (std::size_t k = first; k < last; k += 2) {
      w[k] += step / 3.0;
      w[k + 1] += 4.0 * step / 3.0;
      w[k + 2] += step / 3.0;
    }
  };
  if (intervals % 2 == 0) {
    add_third(0, intervals);
    return w;
  }
  // odd interval count: 1/3 rule up to intervals-3, then the 3/8 rule
  add_third(0, intervals - 3);
  const std::size_t s = intervals - 3;
  w[s] += 3.0 * step / 8.0;
  w[s + 1] += 9.0 * step / 8.0;
  w[s + 2] += 9.0 * step / 8.0;
  w[s + 3] += 3.0 * step / 8.0;

  std::vector<double> sym(point_count);
  for (std::size_t k = 0; k < point_count; ++k) {
    sym[k] = 0.5 * (w[k] + w[point_count - 1 - k]);
  }
  return sym;
}

cplx integrate(std::span<const cplx> values, const QGrid& grid) {
  if (values.size() != grid.size()) {
    throw ContractError("integrate: value count does not match grid size");
  }
  return simd::active_kernels().weighted_sum(grid.weights().data(), values.data(), values.size());
}

double integrate(std::span<const double> values, const QGrid& grid) {
  if (values.size() != grid.size()) {
    throw ContractError("integrate: value count does not match grid size");
  }
  const auto w = grid.weights();
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) s += w[k] * values[k];
  return s;
}

cplx inner_product(const PositionWave& a, const PositionWave& b) {
  if (!(a.grid() == b.grid())) throw ContractError("inner_product: grid mismatch");
  return simd::active_kernels().weighted_inner(a.grid().weights().data(), a.amplitudes().data(),
                                               b.amplitudes().data(), a.size());
}

}  // namespace cvq
