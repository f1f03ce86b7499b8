#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cvq {

struct NelderMeadOptions {
  // stop when the simplex values span less than this
  double ftol = 1e-9;
  // ... or the simplex has collapsed below this in every coordinate
  double xtol = 1e-10;
  std::size_t max_evals = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  // best value after each iteration; non-increasing
  std::vector<double> trace;
  bool converged = false;
};

using ScalarFn = std::function<double(const std::vector<double>&)>;

// Minimizes f inside the box [lower, upper]; trial points are clamped onto
// the box. Non-finite values rank as worst.
NelderMeadResult nelder_mead(const ScalarFn& f, std::vector<double> x0,
                             const std::vector<double>& steps, const std::vector<double>& lower,
                             const std::vector<double>& upper, const NelderMeadOptions& opt = {});

}  // namespace cvq
