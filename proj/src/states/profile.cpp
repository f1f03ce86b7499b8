#include "cvq/states/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/numerics/fock.hpp"
#include "cvq/numerics/hermite.hpp"
#include "cvq/states/states.hpp"

namespace cvq {
namespace {

// Trailing coefficients below this fraction of the peak are not summed.
constexpr double kFockTrim = 1e-16;

}  // namespace

StateProfile StateProfile::from_fock(FockVector coefficients) {
  StateProfile p;
  p.kind_ = Kind::Fock;
  p.fock_ = std::move(coefficients);
  return p;
}

StateProfile StateProfile::from_spec(const StateSpec& spec, const QGrid& grid,
                                     const NumericsConfig& numerics) {
  spec.validate();
  StateProfile p;
  p.a_ = spec.a;
  p.r_ = spec.r;
  switch (spec.family) {
    case Family::GaussianSqueezed:
      p.kind_ = Kind::Gaussian;
      break;
    case Family::CubicPhase:
      p.kind_ = Kind::Cubic;
      break;
    case Family::OperatorTruncation:
      p.kind_ = Kind::OperatorTruncation;
      break;
    case Family::FockTruncation:
      p = from_fock(fock_truncation_coefficients(spec.a, spec.r, grid));
      break;
    case Family::Trisqueezed: {
      p = from_fock(trisqueezed_coefficients(spec.f, numerics));
      p.op_ = {spec.s, spec.t, 0.0};
      break;
    }
    case Family::BlochSuperposition:
      p = from_fock(FockVector(bloch_coefficients(spec.theta, spec.phi)));
      p.op_ = bloch_post_op(spec);
      break;
  }
  return p;
}

StateProfile StateProfile::then(const GaussianOp& op) const {
  op.validate();
  StateProfile out(*this);
  const ComposedOp c = compose(op_, op);
  out.op_ = c.op;
  out.phase_ = phase_ + c.phase;
  return out;
}

double StateProfile::exact_norm2() const noexcept {
  switch (kind_) {
    case Kind::Gaussian:
    case Kind::Cubic:
      return 1.0;
    case Kind::OperatorTruncation:
      // the sampled envelope already carries the (e^r sqrt(pi))^{-1/2} prefactor
      return operator_truncation_norm2(a_, r_) / (std::exp(r_) * std::sqrt(std::numbers::pi));
    case Kind::Fock:
      return fock_.norm2();
  }
  return 1.0;
}

PositionWave StateProfile::sample_raw(const QGrid& grid) const {
  const auto q = grid.points();
  const std::size_t m = q.size();
  const double scale = std::exp(op_.t);
  std::vector<double> x(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = scale * (q[k] - op_.d);

  std::vector<cplx> vals(m);
  if (kind_ == Kind::Fock) {
    const std::size_t top = fock_.highest_occupied(kFockTrim);
    vals = hermite_series(fock_.coefficients().first(top + 1), x);
  } else {
    const double e2r = std::exp(-2.0 * r_);
    const double pref = 1.0 / std::sqrt(std::exp(r_) * std::sqrt(std::numbers::pi));
    for (std::size_t k = 0; k < m; ++k) {
      const double xk = x[k];
      const double env = pref * std::exp(-0.5 * xk * xk * e2r);
      switch (kind_) {
        case Kind::Gaussian:
          vals[k] = env;
          break;
        case Kind::Cubic: {
          const double ph = a_ * xk * xk * xk;
          vals[k] = env * cplx(std::cos(ph), std::sin(ph));
          break;
        }
        case Kind::OperatorTruncation:
          vals[k] = env * cplx(1.0, a_ * xk * xk * xk);
          break;
        case Kind::Fock:
          break;
      }
    }
  }

  const double amp = std::exp(0.5 * op_.t);
  const bool kicked = op_.s != 0.0 || phase_ != 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    vals[k] *= amp;
    if (kicked) {
      const double ph = op_.s * q[k] + phase_;
      vals[k] *= cplx(std::cos(ph), std::sin(ph));
    }
  }
  return PositionWave(grid, std::move(vals));
}

PositionWave StateProfile::sample(const QGrid& grid) const {
  PositionWave raw = sample_raw(grid);
  raw.require_tail_decay("state sampling");
  const double expected = exact_norm2();
  const double got = raw.norm2();
  if (std::abs(got - expected) > 1e-8 * expected) {
    std::ostringstream msg;
    msg << "state sampling: quadrature norm " << got << " differs from exact " << expected
        << "; grid step " << grid.step() << " or extent " << grid.half_extent() << " inadequate";
    throw GridError(msg.str(), 2.0 * grid.half_extent());
  }
  return raw.normalized();
}

}  // namespace cvq
