#include "cvq/optimize/trisqueeze_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvq/error.hpp"
#include "cvq/metrics/metrics.hpp"
#include "cvq/optimize/nelder_mead.hpp"
#include "cvq/states/profile.hpp"
#include "cvq/states/states.hpp"

namespace cvq {

TrisqueezeFit fit_trisqueezed(double a, double r, const NumericsConfig& numerics,
                              const TrisqueezeBounds& bounds) {
  const StateSpec target = StateSpec::cubic_phase(a, r);
  const QGrid grid = grid_for(target, 0.5, numerics);
  const PositionWave phi_c = make_state(target, grid, numerics);

  TrisqueezeFit fit;
  auto loss = [&](const std::vector<double>& x) {
    try {
      const StateSpec spec = StateSpec::trisqueezed(cplx(x[0], 0.0), x[1], x[2]);
      return -state_fidelity(phi_c, make_state(spec, grid, numerics));
    } catch (const Error&) {
      return 0.0;
    }
  };

  if (a == 0.0) {
    fit.spec = StateSpec::trisqueezed(0.0, 0.0, -r);
    fit.fidelity = -loss({0.0, 0.0, -r});
    fit.evaluations = 1;
    return fit;
  }

  // First order in f puts weight i f sqrt(6) on |3>, against a e^{3r} sqrt(6) / 2^{3/2}
  // for the cubic phase state; the squeeze t ~ -r undoes the envelope.
  const double f_guess = std::clamp(a * std::exp(3.0 * r) / (2.0 * std::sqrt(2.0)), 0.005, 0.075);
  const std::vector<double> lo{bounds.f.lo, bounds.s.lo, bounds.t.lo};
  const std::vector<double> hi{bounds.f.hi, bounds.s.hi, bounds.t.hi};
  const std::vector<double> steps{0.25 * f_guess, 0.3, 0.2};
  NelderMeadOptions nm;
  nm.ftol = 1e-11;
  nm.xtol = 1e-9;
  nm.max_evals = 1500;

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x{0.0, 0.0, -r};
  for (double scale : {0.4, 0.7, 1.0}) {
    const NelderMeadResult res = nelder_mead(loss, {scale * f_guess, 0.0, -r}, steps, lo, hi, nm);
    fit.evaluations += res.evaluations;
    if (res.fx < best) {
      best = res.fx;
      best_x = res.x;
    }
  }
  fit.spec = StateSpec::trisqueezed(cplx(best_x[0], 0.0), best_x[1], best_x[2]);
  fit.fidelity = -best;
  return fit;
}

}  // namespace cvq
