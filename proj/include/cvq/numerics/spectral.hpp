#pragma once

#include <span>

#include "cvq/numerics/grid.hpp"

namespace cvq {

// d/dq (order 1) or d^2/dq^2 (order 2) of a sampled wave via a Fourier-space
// multiplier. The periodic extension is harmless because the tails must decay;
// a wave that fails the tail check raises GridError.
PositionWave spectral_derivative(const PositionWave& wave, int order);

struct SpectralPair {
  PositionWave first;
  PositionWave second;
};
// Both derivatives from one forward transform.
SpectralPair spectral_derivatives(const PositionWave& wave);

// Evaluate the band-limited (trigonometric) interpolant of `wave` at arbitrary
// points. Points outside [-L, L] evaluate to zero. Throws GridError when the
// spectrum carries weight above `max_wavenumber` (pass 0 to skip that check).
std::vector<cplx> bandlimited_eval(const PositionWave& wave, std::span<const double> at,
                                   double max_wavenumber = 0.0);

}  // namespace cvq
