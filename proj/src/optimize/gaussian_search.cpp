#include "cvq/optimize/gaussian_search.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "cvq/error.hpp"
#include "cvq/states/profile.hpp"
#include "cvq/states/states.hpp"

namespace cvq {
namespace {

struct Axis {
  const char* name;
  Interval box;
  double step;
};

std::vector<Axis> axes_for(const GaussianSearchOptions& opt) {
  std::vector<Axis> ax;
  if (opt.dof & kDofS) ax.push_back({"s", opt.bounds.s, 1.0});
  if (opt.dof & kDofT) ax.push_back({"t", opt.bounds.t, 0.4});
  if (opt.dof & kDofD) ax.push_back({"d", opt.bounds.d, 0.5});
  return ax;
}

GaussianOp to_op(const std::vector<Axis>& ax, const std::vector<double>& x) {
  GaussianOp op;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const std::string_view n = ax[i].name;
    if (n == "s") op.s = x[i];
    else if (n == "t") op.t = x[i];
    else op.d = x[i];
  }
  return op;
}

// Nine starts: levels -4..4 on one axis, a 3x3 lattice on two, origin plus
// the cube corners on three. Offsets reach half of each bound.
std::vector<std::vector<double>> start_points(const std::vector<Axis>& ax) {
  auto reach = [&](std::size_t i) { return 0.5 * std::min(-ax[i].box.lo, ax[i].box.hi); };
  std::vector<std::vector<double>> starts;
  if (ax.size() == 1) {
    starts.push_back({0.0});
    for (int l = 1; l <= 4; ++l) {
      starts.push_back({reach(0) * l / 4.0});
      starts.push_back({-reach(0) * l / 4.0});
    }
  } else if (ax.size() == 2) {
    starts.push_back({0.0, 0.0});
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j)
        if (i || j) starts.push_back({i * reach(0), j * reach(1)});
  } else {
    starts.push_back({0.0, 0.0, 0.0});
    for (int c = 0; c < 8; ++c) {
      starts.push_back({(c & 1 ? 1 : -1) * reach(0), (c & 2 ? 1 : -1) * reach(1),
                        (c & 4 ? 1 : -1) * reach(2)});
    }
  }
  return starts;
}

QGrid search_grid(const StateSpec& base, const GaussianSearchOptions& opt) {
  const double t_reach = (opt.dof & kDofT) ? std::max(-opt.bounds.t.lo, opt.bounds.t.hi) : 0.0;
  return grid_for(base, t_reach, opt.numerics);
}

}  // namespace

double evaluate_with_op(const StateSpec& base, const Objective& objective, const GaussianOp& op,
                        const GaussianSearchOptions& opt) {
  const QGrid grid = search_grid(base, opt);
  const BoundObjective metric(objective, grid, opt.numerics);
  const StateProfile profile = StateProfile::from_spec(base, grid, opt.numerics);
  return metric(profile.then(op).sample(grid));
}

OptimizationRecord optimize_gaussian(const StateSpec& base, const Objective& objective,
                                     const GaussianSearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Axis> ax = axes_for(opt);
  if (ax.empty()) throw ContractError("optimize_gaussian: no degree of freedom selected");

  const QGrid grid = search_grid(base, opt);
  const BoundObjective metric(objective, grid, opt.numerics);
  const StateProfile profile = StateProfile::from_spec(base, grid, opt.numerics);

  std::string last_error;
  auto loss = [&](const std::vector<double>& x) {
    try {
      return objective.loss(metric(profile.then(to_op(ax, x)).sample(grid)));
    } catch (const Error& e) {
      last_error = e.what();
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> lo, hi, steps;
  for (const auto& a : ax) {
    lo.push_back(a.box.lo);
    hi.push_back(a.box.hi);
    steps.push_back(a.step);
  }

  OptimizationRecord rec;
  rec.objective = objective.id();
  rec.method = "nelder_mead_multistart";
  for (const auto& a : ax) rec.names.emplace_back(a.name);
  rec.numerics = opt.numerics;
  rec.grid_half_extent = grid.half_extent();
  rec.spec = base;

  const double base_loss = loss(std::vector<double>(ax.size(), 0.0));
  ++rec.evaluations;
  rec.baseline = objective.value_from_loss(base_loss);

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x(ax.size(), 0.0);
  if (std::isfinite(base_loss)) best = base_loss;
  for (const auto& x0 : start_points(ax)) {
    const NelderMeadResult r = nelder_mead(loss, x0, steps, lo, hi, opt.local);
    rec.evaluations += r.evaluations;
    rec.iterations += r.iterations;
    if (r.fx < best) {
      best = r.fx;
      best_x = r.x;
    }
    rec.trace.push_back(objective.value_from_loss(best));
  }
  if (!std::isfinite(best)) {
    throw GridError("optimize_gaussian: every start failed; last error: " + last_error,
                    2.0 * grid.half_extent());
  }
  rec.params = best_x;
  rec.op = to_op(ax, best_x);
  rec.value = objective.value_from_loss(best);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace cvq
