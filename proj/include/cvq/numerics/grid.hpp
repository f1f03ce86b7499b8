#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace cvq {

using cplx = std::complex<double>;

// Boundary amplitude allowed relative to the peak before a wave is rejected
// from metric evaluation or spectral work.
inline constexpr double kTailTolerance = 1e-8;

// Uniform position grid q_k = -L + k h, h = 2L / (M - 1), symmetric about 0.
// Points and composite-rule weights are computed once and shared between
// copies.
class QGrid {
 public:
  QGrid(double half_extent, std::size_t point_count);

  double half_extent() const noexcept { return half_extent_; }
  std::size_t size() const noexcept { return points_->size(); }
  double step() const noexcept { return step_; }

  std::span<const double> points() const noexcept { return *points_; }
  std::span<const double> weights() const noexcept { return *weights_; }
  double point(std::size_t k) const noexcept { return (*points_)[k]; }

  bool operator==(const QGrid& other) const noexcept {
    return half_extent_ == other.half_extent_ && size() == other.size();
  }

 private:
  double half_extent_;
  double step_;
  std::shared_ptr<const std::vector<double>> points_;
  std::shared_ptr<const std::vector<double>> weights_;
};

// Sampled wavefunction on a QGrid.
class PositionWave {
 public:
  PositionWave(QGrid grid, std::vector<cplx> amplitudes);
  explicit PositionWave(QGrid grid);

  const QGrid& grid() const noexcept { return grid_; }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }
  std::size_t size() const noexcept { return amps_.size(); }
  cplx operator[](std::size_t k) const noexcept { return amps_[k]; }
  cplx& operator[](std::size_t k) noexcept { return amps_[k]; }

  double norm2() const;
  PositionWave normalized() const;

  // max(|phi(q_0)|, |phi(q_{M-1})|) / max_k |phi(q_k)|
  double tail_ratio() const noexcept;
  bool tails_decay() const noexcept { return tail_ratio() <= kTailTolerance; }
  // Throws GridError naming a suggested extent when the tails do not decay.
  void require_tail_decay(const char* context) const;

 private:
  QGrid grid_;
  std::vector<cplx> amps_;
};

// Photon-number amplitudes c_0 .. c_{N_cut}.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {}
  static FockVector basis(std::size_t n, std::size_t cutoff);

  std::size_t cutoff() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const cplx> coefficients() const noexcept { return c_; }
  std::span<cplx> coefficients() noexcept { return c_; }
  cplx operator[](std::size_t n) const noexcept { return c_[n]; }
  cplx& operator[](std::size_t n) noexcept { return c_[n]; }

  double norm2() const noexcept;
  FockVector normalized() const;
  // sum_{n >= first} |c_n|^2
  double tail_mass(std::size_t first) const noexcept;
  // Highest n with |c_n| above rel_tol * max|c|; 0 for the empty vector.
  std::size_t highest_occupied(double rel_tol = 1e-15) const noexcept;
  cplx inner(const FockVector& other) const;

 private:
  std::vector<cplx> c_;
};

}  // namespace cvq
