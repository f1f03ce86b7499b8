#include "cvq/numerics/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/numerics/quadrature.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq {

QGrid::QGrid(double half_extent, std::size_t point_count) : half_extent_(half_extent) {
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw ContractError("QGrid: half extent must be positive and finite");
  }
  if (point_count < 2) throw ContractError("QGrid: need at least two points");
  step_ = 2.0 * half_extent / static_cast<double>(point_count - 1);

  std::vector<double> pts(point_count);
  const std::size_t half = point_count / 2;
  for (std::size_t k = 0; k < half; ++k) {
    pts[k] = -half_extent + static_cast<double>(k) * step_;
    pts[point_count - 1 - k] = -pts[k];
  }
  if (point_count % 2 == 1) pts[half] = 0.0;

  points_ = std::make_shared<const std::vector<double>>(std::move(pts));
  weights_ = std::make_shared<const std::vector<double>>(simpson_weights(point_count, step_));
}

PositionWave::PositionWave(QGrid grid, std::vector<cplx> amplitudes)
    : grid_(std::move(grid)), amps_(std::move(amplitudes)) {
  if (amps_.size() != grid_.size()) {
    throw ContractError("PositionWave: amplitude count does not match grid size");
  }
}

PositionWave::PositionWave(QGrid grid) : grid_(std::move(grid)), amps_(grid_.size()) {}

double PositionWave::norm2() const {
  const auto w = grid_.weights();
  return simd::active_kernels().weighted_inner(w.data(), amps_.data(), amps_.data(), amps_.size())
      .real();
}

PositionWave PositionWave::normalized() const {
  const double n2 = norm2();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw AccuracyError("cannot normalize a null wave");
  const double scale = 1.0 / std::sqrt(n2);
  std::vector<cplx> out(amps_.size());
  std::transform(amps_.begin(), amps_.end(), out.begin(), [scale](cplx v) { return v * scale; });
  return PositionWave(grid_, std::move(out));
}

double PositionWave::tail_ratio() const noexcept {
  double peak = 0.0;
  for (const cplx& v : amps_) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(amps_.front()), std::abs(amps_.back())) / peak;
}

void PositionWave::require_tail_decay(const char* context) const {
  const double ratio = tail_ratio();
  if (ratio <= kTailTolerance) return;
  std::ostringstream msg;
  msg << context << ": grid too small (boundary/peak amplitude " << ratio
      << " > " << kTailTolerance << " at half extent " << grid_.half_extent()
      << "); required half extent at least " << 2.0 * grid_.half_extent();
  throw GridError(msg.str(), 2.0 * grid_.half_extent());
}

FockVector FockVector::basis(std::size_t n, std::size_t cutoff) {
  if (n > cutoff) throw ContractError("FockVector::basis: n exceeds cutoff");
  std::vector<cplx> c(cutoff + 1);
  c[n] = 1.0;
  return FockVector(std::move(c));
}

double FockVector::norm2() const noexcept {
  double s = 0.0;
  for (const cplx& v : c_) s += std::norm(v);
  return s;
}

FockVector FockVector::normalized() const {
  const double n2 = norm2();
  if (!(n2 > 0.0)) throw AccuracyError("cannot normalize a null Fock vector");
  FockVector out(*this);
  const double scale = 1.0 / std::sqrt(n2);
  for (cplx& v : out.c_) v *= scale;
  return out;
}

double FockVector::tail_mass(std::size_t first) const noexcept {
  double s = 0.0;
  for (std::size_t n = first; n < c_.size(); ++n) s += std::norm(c_[n]);
  return s;
}

std::size_t FockVector::highest_occupied(double rel_tol) const noexcept {
  double peak = 0.0;
  for (const cplx& v : c_) peak = std::max(peak, std::abs(v));
  for (std::size_t n = c_.size(); n-- > 0;) {
    if (std::abs(c_[n]) > rel_tol * peak) return n;
  }
  return 0;
}

cplx FockVector::inner(const FockVector& other) const {
  if (other.size() != size()) throw ContractError("FockVector::inner: cutoff mismatch");
  cplx s = 0.0;
  for (std::size_t n = 0; n < c_.size(); ++n) s += std::conj(c_[n]) * other.c_[n];
  return s;
}

}  // namespace cvq
