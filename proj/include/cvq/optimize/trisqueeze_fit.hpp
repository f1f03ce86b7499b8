#pragma once

#include "cvq/numerics/settings.hpp"
#include "cvq/optimize/gaussian_search.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

struct TrisqueezeBounds {
  // beyond about 0.078 the default cutoff leaks
  Interval f{-0.1, 0.1};
  Interval s{-5.0, 5.0};
  Interval t{-1.5, 1.5};
};

struct TrisqueezeFit {
  StateSpec spec;
  double fidelity = 0.0;
  std::size_t evaluations = 0;
};

// Trisqueezed state (real f, s, t) of maximal fidelity with the cubic phase
// state of the same a and r. Parameters that leak past the cutoff score as
// zero fidelity.
TrisqueezeFit fit_trisqueezed(double a, double r, const NumericsConfig& numerics = {},
                              const TrisqueezeBounds& bounds = {});

}  // namespace cvq
