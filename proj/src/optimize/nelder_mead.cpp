#include "cvq/optimize/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cvq/error.hpp"

namespace cvq {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

// NaN sorts last
bool better(double a, double b) {
  if (std::isnan(b)) return !std::isnan(a);
  return a < b;
}

}  // namespace

NelderMeadResult nelder_mead(const ScalarFn& f, std::vector<double> x0,
                             const std::vector<double>& steps, const std::vector<double>& lower,
                             const std::vector<double>& upper, const NelderMeadOptions& opt) {
  const std::size_t n = x0.size();
  if (n == 0 || steps.size() != n || lower.size() != n || upper.size() != n) {
    throw ContractError("nelder_mead: dimension mismatch");
  }
  NelderMeadResult res;
  auto clamp = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
  };
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  clamp(x0);
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += steps[i];
    if (x[i] > upper[i]) x[i] = x0[i] - steps[i];
    clamp(x);
    simplex.push_back({x, eval(x)});
  }
  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return better(a.f, b.f); });
  };
  order();

  std::vector<double> centroid(n), trial(n);
  auto point = [&](double coef) {
    const auto& worst = simplex.back().x;
    for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + coef * (centroid[i] - worst[i]);
    clamp(trial);
    return trial;
  };

  while (res.evaluations < opt.max_evals) {
    const double spread = simplex.back().f - simplex.front().f;
    double size = 0.0;
    for (std::size_t v = 1; v <= n; ++v)
      for (std::size_t i = 0; i < n; ++i)
        size = std::max(size, std::abs(simplex[v].x[i] - simplex[0].x[i]));
    if ((std::isfinite(spread) && spread <= opt.ftol) || size <= opt.xtol) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);

    Vertex& worst = simplex.back();
    const double f_best = simplex.front().f;
    const double f_second = simplex[n - 1].f;

    std::vector<double> xr = point(kReflect);
    const double fr = eval(xr);
    if (better(fr, f_best)) {
      std::vector<double> xe = point(kExpand);
      const double fe = eval(xe);
      if (better(fe, fr)) worst = {std::move(xe), fe};
      else worst = {std::move(xr), fr};
    } else if (better(fr, f_second)) {
      worst = {std::move(xr), fr};
    } else {
      const bool outside = better(fr, worst.f);
      std::vector<double> xc = outside ? point(kContract) : point(-kContract);
      const double fc = eval(xc);
      if (better(fc, outside ? fr : worst.f) || fc == (outside ? fr : worst.f)) {
        worst = {std::move(xc), fc};
      } else {
        const auto best_x = simplex.front().x;
        for (std::size_t v = 1; v <= n; ++v) {
          for (std::size_t i = 0; i < n; ++i)
            simplex[v].x[i] = best_x[i] + kShrink * (simplex[v].x[i] - best_x[i]);
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
    order();
    res.trace.push_back(simplex.front().f);
  }
  res.x = simplex.front().x;
  res.fx = simplex.front().f;
  return res;
}

}  // namespace cvq
