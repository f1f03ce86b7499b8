#pragma once

#include "cvq/numerics/grid.hpp"

namespace cvq {

// Gaussian post-operation phi(q) -> e^{t/2} e^{i s q} phi(e^t (q - d)):
// squeeze by t, then shift position by d, then kick momentum by s.
struct GaussianOp {
  double s = 0.0;
  double t = 0.0;
  double d = 0.0;

  bool is_identity() const noexcept { return s == 0.0 && t == 0.0 && d == 0.0; }
  void validate() const;

  // Exact inverse: t -> -t, s -> -s e^{-t}, d -> -d e^{t}. Composing an op
  // with its inverse leaves the global phase e^{i s d}.
  GaussianOp inverse() const noexcept;

  bool operator==(const GaussianOp&) const = default;
};

// `second` applied after `first`, as one op plus the global phase the
// composition introduces.
struct ComposedOp {
  GaussianOp op;
  double phase = 0.0;
};
ComposedOp compose(const GaussianOp& first, const GaussianOp& second);

// Resamples phi(e^t (q - d)) with the band-limited interpolant of the input.
// Throws GridError when the squeezed wave would not fit the grid (tails or
// bandwidth) and when the norm is not preserved to 1e-8.
PositionWave apply_gaussian(const PositionWave& wave, const GaussianOp& op);

}  // namespace cvq
