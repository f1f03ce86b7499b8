#pragma once

#include "cvq/numerics/grid.hpp"

namespace cvq {

// Input and outcome of the magic-state gate teleportation: the input mode is
// S(R)|0> and the homodyne outcome is m.
struct GateContext {
  double a = 0.0;
  double R = 0.5;
  double m = 0.0;
};

// |<a|b>|^2 for normalized waves on one grid. Overshoot above 1 by at most
// 1e-9 is clamped; anything larger raises AccuracyError.
double state_fidelity(const PositionWave& a, const PositionWave& b);

// Overlap of the reweighted resource w(q) phi(q) with the ideal output
// e^{i a q^3} w(q), both normalized, where w(q) = exp(-q^2 e^{-2R} / 2) is
// the input wavefunction. Only m = 0 is supported.
double gate_fidelity(const PositionWave& resource, const GateContext& ctx);

// Var(p - 3 a q^2) from spectral derivatives. Raises AccuracyError when a
// Hermitian expectation carries an imaginary part above 1e-8.
double nl_variance(const PositionWave& resource, double a);

// Moments used by nl_variance; exposed for tests.
struct QuadratureMoments {
  double p, p2, q2, q4;
  double pq2_sym;  // E(p q^2) + E(q^2 p)
};
QuadratureMoments quadrature_moments(const PositionWave& wave);

}  // namespace cvq
