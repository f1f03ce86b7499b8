#include "cvq/numerics/hermite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq {
namespace {

const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);

std::vector<double> ground_state(std::span<const double> x) {
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) g[k] = kPiQuarterInv * std::exp(-0.5 * x[k] * x[k]);
  return g;
}

}  // namespace

std::vector<double> hermite_poly(int n, std::span<const double> q, int max_order) {
  if (n < 0) throw ContractError("hermite_poly: negative order");
  if (n > max_order) {
    std::ostringstream msg;
    msg << "hermite_poly: order " << n << " exceeds configured maximum " << max_order;
    throw ConfigError(msg.str());
  }
  std::vector<double> prev(q.size(), 1.0);
  if (n == 0) return prev;
  std::vector<double> cur(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) cur[k] = 2.0 * q[k];
  for (int m = 1; m < n; ++m) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double next = 2.0 * q[k] * cur[k] - 2.0 * m * prev[k];
      prev[k] = cur[k];
      cur[k] = next;
    }
  }
  return cur;
}

std::vector<cplx> hermite_series(std::span<const cplx> coeffs, std::span<const double> x) {
  const auto psi0 = ground_state(x);
  std::vector<cplx> out(x.size());
  simd::active_kernels().hermite_series(coeffs.data(), coeffs.size(), x.data(), psi0.data(),
                                        out.data(), x.size());
  return out;
}

double required_half_extent(std::size_t n_max) {
  return std::sqrt(2.0 * static_cast<double>(n_max)) + 6.0;
}

PositionWave fock_to_position(const FockVector& fock, const QGrid& grid) {
  const std::size_t top = fock.highest_occupied();
  const double need = required_half_extent(top);
  if (grid.half_extent() < need) {
    std::ostringstream msg;
    msg << "fock_to_position: grid too small for n = " << top << "; required half extent " << need;
    throw GridError(msg.str(), need);
  }
  auto coeffs = fock.coefficients().first(top + 1);
  PositionWave wave(grid, hermite_series(coeffs, grid.points()));
  const double fock_n2 = fock.norm2();
  if (std::abs(wave.norm2() - fock_n2) > 1e-8 * std::max(1.0, fock_n2)) {
    std::ostringstream msg;
    msg << "fock_to_position: norm not preserved (" << wave.norm2() << " vs " << fock_n2
        << "); grid step " << grid.step() << " too coarse";
    throw GridError(msg.str(), grid.half_extent());
  }
  return wave;
}

FockVector position_to_fock(const PositionWave& wave, std::size_t n_max) {
  wave.require_tail_decay("position_to_fock");
  const QGrid& grid = wave.grid();
  const auto x = grid.points();
  const auto w = grid.weights();
  const auto& kern = simd::active_kernels();

  std::vector<double> prev = ground_state(x);
  std::vector<double> cur(x.size());
  std::vector<double> weighted(x.size());
  std::vector<cplx> c(n_max + 1);

  auto project = [&](const std::vector<double>& psi) {
    for (std::size_t k = 0; k < x.size(); ++k) weighted[k] = w[k] * psi[k];
    return kern.weighted_sum(weighted.data(), wave.amplitudes().data(), x.size());
  };

  c[0] = project(prev);
  if (n_max >= 1) {
    const double s2 = std::sqrt(2.0);
    for (std::size_t k = 0; k < x.size(); ++k) cur[k] = s2 * x[k] * prev[k];
    c[1] = project(cur);
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    const double up = std::sqrt(2.0 / static_cast<double>(n + 1));
    const double down = std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double next = up * x[k] * cur[k] - down * prev[k];
      prev[k] = cur[k];
      cur[k] = next;
    }
    c[n + 1] = project(cur);
  }
  return FockVector(std::move(c));
}

}  // namespace cvq
