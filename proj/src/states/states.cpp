#include "cvq/states/states.hpp"

#include <cmath>
#include <numbers>

#include "cvq/error.hpp"
#include "cvq/numerics/fock.hpp"
#include "cvq/numerics/hermite.hpp"
#include "cvq/states/profile.hpp"

namespace cvq {

double operator_truncation_norm2(double a, double r) {
  return std::exp(r) * std::sqrt(std::numbers::pi) * (1.0 + 1.875 * a * a * std::exp(6.0 * r));
}

FockVector fock_truncation_coefficients(double a, double r, const QGrid& grid) {
  const PositionWave phi_c = make_cubic_phase(a, r, grid);
  return position_to_fock(phi_c, 3).normalized();
}

FockVector trisqueezed_coefficients(cplx f, const NumericsConfig& numerics) {
  const std::size_t cutoff = numerics.fock_cutoff;
  const FockOperator gen = trisqueeze_generator(f, cutoff);
  FockExpOptions opt;
  opt.guard = numerics.fock_guard;
  return fock_unitary_exp(gen, FockVector::basis(0, cutoff), opt);
}

GaussianOp bloch_post_op(const StateSpec& spec) {
  return {std::numbers::sqrt2 * spec.d, spec.r_b, 0.0};
}

PositionWave make_state(const StateSpec& spec, const QGrid& grid, const NumericsConfig& numerics,
                        const GaussianOp& post) {
  StateProfile p = StateProfile::from_spec(spec, grid, numerics);
  if (!post.is_identity()) p = p.then(post);
  return p.sample(grid);
}

QGrid grid_for(const StateSpec& spec, double extra_squeeze, const NumericsConfig& numerics) {
  double squeeze = spec.max_abs_squeeze() + std::abs(extra_squeeze);
  if (spec.family == Family::Trisqueezed || spec.family == Family::BlochSuperposition) {
    // Fock content spreads the unsqueezed profile by about sqrt(2 n).
    squeeze += 0.5;
  }
  return default_grid(squeeze, numerics);
}

PositionWave make_gaussian_squeezed(double r, const QGrid& grid) {
  return make_state(StateSpec::gaussian_squeezed(r), grid);
}

PositionWave make_cubic_phase(double a, double r, const QGrid& grid) {
  return make_state(StateSpec::cubic_phase(a, r), grid);
}

PositionWave make_fock_truncation(double a, double r, const QGrid& grid) {
  return make_state(StateSpec::fock_truncation(a, r), grid);
}

PositionWave make_operator_truncation(double a, double r, const QGrid& grid) {
  return make_state(StateSpec::operator_truncation(a, r), grid);
}

PositionWave make_trisqueezed(cplx f, double s, double t, const QGrid& grid,
                              const NumericsConfig& numerics) {
  return make_state(StateSpec::trisqueezed(f, s, t), grid, numerics);
}

PositionWave make_bloch_superposition(const std::vector<double>& theta,
                                      const std::vector<double>& phi, double r_b, double d,
                                      const QGrid& grid) {
  if (theta.size() != phi.size()) {
    throw ContractError("make_bloch_superposition: theta and phi lengths differ");
  }
  return make_state(StateSpec::bloch(theta, phi, r_b, d), grid);
}

}  // namespace cvq
