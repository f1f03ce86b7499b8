#pragma once

#include "cvq/numerics/settings.hpp"
#include "cvq/optimize/nelder_mead.hpp"
#include "cvq/optimize/objective.hpp"
#include "cvq/optimize/record.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

enum Dof : unsigned { kDofS = 1u, kDofT = 2u, kDofD = 4u };

struct Interval {
  double lo, hi;
};

struct GaussianBounds {
  Interval s{-5.0, 5.0};
  Interval t{-1.5, 1.5};
  Interval d{-3.0, 3.0};
};

struct GaussianSearchOptions {
  unsigned dof = kDofS | kDofT;
  GaussianBounds bounds;
  NelderMeadOptions local{1e-10, 1e-9, 1500};
  NumericsConfig numerics;
};

// Metric of `base` followed by `op`, on the grid optimize_gaussian would use.
double evaluate_with_op(const StateSpec& base, const Objective& objective, const GaussianOp& op,
                        const GaussianSearchOptions& opt = {});

// Derivative-free search over the selected Gaussian degrees of freedom, run
// from nine deterministic starts (the identity among them). The returned
// value is never worse than the identity.
OptimizationRecord optimize_gaussian(const StateSpec& base, const Objective& objective,
                                     const GaussianSearchOptions& opt = {});

}  // namespace cvq
