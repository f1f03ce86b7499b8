#pragma once

#include "cvq/numerics/grid.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/states/gaussian_op.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

// A state known in closed form (or as a Fock expansion) together with the
// Gaussian operations applied to it. Sampling evaluates phi(e^t (q - d))
// directly, so optimizers never resample a grid.
class StateProfile {
 public:
  // Fock-based families (fock_truncation, trisqueezed, bloch) compute their
  // coefficients up front; `grid` is the quadrature grid used for the
  // fock_truncation overlaps.
  static StateProfile from_spec(const StateSpec& spec, const QGrid& grid,
                                const NumericsConfig& numerics = {});
  static StateProfile from_fock(FockVector coefficients);

  // This profile followed by `op`.
  StateProfile then(const GaussianOp& op) const;

  // Normalized samples. Throws GridError when the tails do not decay or the
  // sampled norm misses the exact norm by more than 1e-8.
  PositionWave sample(const QGrid& grid) const;

  // Samples without normalization (the closed-form prefactors are exact).
  PositionWave sample_raw(const QGrid& grid) const;

  const GaussianOp& op() const noexcept { return op_; }
  double phase() const noexcept { return phase_; }
  // Coefficients before any Gaussian operation, for Fock-based profiles.
  const FockVector* fock() const noexcept { return kind_ == Kind::Fock ? &fock_ : nullptr; }

 private:
  enum class Kind { Gaussian, Cubic, OperatorTruncation, Fock };

  double exact_norm2() const noexcept;

  Kind kind_ = Kind::Gaussian;
  double a_ = 0.0;
  double r_ = 0.0;
  FockVector fock_;
  GaussianOp op_;
  double phase_ = 0.0;
};

}  // namespace cvq
