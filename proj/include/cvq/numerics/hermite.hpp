#pragma once

#include <span>
#include <vector>

#include "cvq/numerics/grid.hpp"

namespace cvq {

inline constexpr int kDefaultHermiteMaxOrder = 64;

// Physicists' Hermite polynomial H_n at each point, by the three-term
// recurrence. Orders above max_order raise ConfigError (the polynomials
// overflow long before the Hermite functions do).
std::vector<double> hermite_poly(int n, std::span<const double> q,
                                 int max_order = kDefaultHermiteMaxOrder);

// sum_n c_n psi_n(x) at arbitrary points, psi_n the oscillator eigenfunctions
// pi^{-1/4} (2^n n!)^{-1/2} H_n(x) exp(-x^2/2) built by a recurrence on psi_n.
std::vector<cplx> hermite_series(std::span<const cplx> coeffs, std::span<const double> x);

// Smallest half extent that holds every psi_n with n <= n_max.
double required_half_extent(std::size_t n_max);

PositionWave fock_to_position(const FockVector& fock, const QGrid& grid);

// c_n = integral psi_n(q) phi(q) dq, n = 0..n_max.
FockVector position_to_fock(const PositionWave& wave, std::size_t n_max);

}  // namespace cvq
