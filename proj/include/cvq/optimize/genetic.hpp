#pragma once

#include <cstdint>

#include "cvq/numerics/settings.hpp"
#include "cvq/optimize/gaussian_search.hpp"
#include "cvq/optimize/objective.hpp"
#include "cvq/optimize/record.hpp"

namespace cvq {

struct GaConfig {
  std::size_t population = 200;
  std::size_t generations = 300;
  std::size_t tournament = 4;
  double crossover_prob = 0.9;
  double blend_alpha = 0.5;
  double mutation_prob = 0.25;
  // fraction of each parameter range
  double mutation_sigma = 0.05;
  double mutation_decay = 0.99;
  std::size_t elitism = 4;
  std::size_t stall_generations = 40;
  double stall_tolerance = 1e-6;
  // after a stall, archive the champion and start a fresh random population
  // while at least stall_generations of budget remain, until this many
  // epochs in a row fail to beat the best champion
  bool restart = true;
  std::size_t restart_patience = 2;
  bool polish = true;
  // archived champions refined by the simplex, best first
  std::size_t polish_candidates = 3;
  double polish_tolerance = 1e-9;
  std::size_t polish_evals = 4000;
  // fitness threads; 0 = hardware concurrency
  unsigned threads = 0;

  void validate() const;
};

struct BlochBounds {
  Interval theta{0.0, 3.141592653589793};
  Interval phi{0.0, 6.283185307179586};
  Interval r_b{-1.5, 1.5};
  Interval d{-3.0, 3.0};
};

// Parameter layout: theta_1..theta_N, phi_1..phi_N, r_b, d.
StateSpec bloch_spec_from_params(std::size_t n, const std::vector<double>& x);
std::vector<std::string> bloch_param_names(std::size_t n);

// Grid shared by every Bloch evaluation for this cutoff.
QGrid bloch_grid(std::size_t n, const BlochBounds& bounds, const NumericsConfig& numerics);

double evaluate_bloch(const StateSpec& spec, const Objective& objective, const QGrid& grid,
                      const NumericsConfig& numerics = {});

// Parameters of cutoff n + 1 describing the same state as x (cutoff n):
// theta_{n+1} = 0, one copy per quarter turn of the now-free phase phi_{n+1}.
std::vector<std::vector<double>> embed_bloch_params(std::size_t n, const std::vector<double>& x);

// Genetic search over Bloch superpositions with cutoff n, restarted on
// stall, then a simplex polish of the best epoch champions. Warm starts
// (parameter vectors of length 2n + 2) join the first generation.
// Deterministic in `seed`; failed evaluations score as the worst fitness.
OptimizationRecord optimize_bloch_ga(std::size_t n, const Objective& objective,
                                     std::uint64_t seed, const GaConfig& cfg = {},
                                     const NumericsConfig& numerics = {},
                                     const BlochBounds& bounds = {},
                                     const std::vector<std::vector<double>>& warm_starts = {});

}  // namespace cvq
