#include "cvq/states/gaussian_op.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/numerics/spectral.hpp"

namespace cvq {

void GaussianOp::validate() const {
  if (!std::isfinite(s) || !std::isfinite(t) || !std::isfinite(d)) {
    throw ContractError("GaussianOp: parameters must be finite");
  }
}

GaussianOp GaussianOp::inverse() const noexcept {
  return {-s * std::exp(-t), -t, -d * std::exp(t)};
}

ComposedOp compose(const GaussianOp& first, const GaussianOp& second) {
  const double e2 = std::exp(second.t);
  ComposedOp out;
  out.op.t = first.t + second.t;
  out.op.s = second.s + first.s * e2;
  out.op.d = second.d + first.d / e2;
  out.phase = -first.s * e2 * second.d;
  return out;
}

PositionWave apply_gaussian(const PositionWave& wave, const GaussianOp& op) {
  op.validate();
  if (op.is_identity()) return wave;

  const QGrid& grid = wave.grid();
  const auto q = grid.points();
  const double scale = std::exp(op.t);
  std::vector<double> src(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) src[k] = scale * (q[k] - op.d);

  const double nyquist = std::numbers::pi / grid.step();
  const double band = (nyquist - std::abs(op.s)) / scale;
  if (band <= 0.0) {
    throw GridError("apply_gaussian: momentum kick exceeds grid bandwidth", grid.half_extent());
  }
  std::vector<cplx> vals = bandlimited_eval(wave, src, band < nyquist ? band : 0.0);

  const double amp = std::exp(0.5 * op.t);
  for (std::size_t k = 0; k < q.size(); ++k) {
    vals[k] *= amp * cplx(std::cos(op.s * q[k]), std::sin(op.s * q[k]));
  }
  PositionWave out(grid, std::move(vals));
  out.require_tail_decay("apply_gaussian");
  const double before = wave.norm2();
  const double after = out.norm2();
  if (std::abs(after - before) > 1e-8 * before) {
    std::ostringstream msg;
    msg << "apply_gaussian: norm changed from " << before << " to " << after
        << " (e^|t| = " << std::exp(std::abs(op.t)) << " too large for this grid)";
    throw GridError(msg.str(), 2.0 * grid.half_extent());
  }
  return out;
}

}  // namespace cvq
