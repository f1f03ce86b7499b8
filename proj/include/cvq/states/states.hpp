#pragma once

#include "cvq/numerics/grid.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/states/gaussian_op.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

PositionWave make_gaussian_squeezed(double r, const QGrid& grid);
PositionWave make_cubic_phase(double a, double r, const QGrid& grid);
PositionWave make_fock_truncation(double a, double r, const QGrid& grid);
PositionWave make_operator_truncation(double a, double r, const QGrid& grid);
PositionWave make_trisqueezed(cplx f, double s, double t, const QGrid& grid,
                              const NumericsConfig& numerics = {});
PositionWave make_bloch_superposition(const std::vector<double>& theta,
                                      const std::vector<double>& phi, double r_b, double d,
                                      const QGrid& grid);

// Any family, optionally followed by a Gaussian post-operation.
PositionWave make_state(const StateSpec& spec, const QGrid& grid,
                        const NumericsConfig& numerics = {}, const GaussianOp& post = {});

// Grid for `spec` after a post-operation squeezing by up to |extra_squeeze|.
QGrid grid_for(const StateSpec& spec, double extra_squeeze, const NumericsConfig& numerics);

// <n|phi_c> for n <= 3, renormalized.
FockVector fock_truncation_coefficients(double a, double r, const QGrid& grid);

// Squared norm of (1 + i a q^3) e^{-q^2 e^{-2r} / 2}: e^r sqrt(pi) (1 + 15/8 a^2 e^{6r}).
double operator_truncation_norm2(double a, double r);

// exp(i f a^3 + i f* a^dag^3)|0> at the configured cutoff.
FockVector trisqueezed_coefficients(cplx f, const NumericsConfig& numerics);

// Squeeze r_b followed by the displacement D(i d) = momentum kick sqrt(2) d.
GaussianOp bloch_post_op(const StateSpec& spec);

}  // namespace cvq
