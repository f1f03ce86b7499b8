#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvq/numerics/settings.hpp"
#include "cvq/optimize/genetic.hpp"

namespace cvq {

enum class ExperimentId {
  FigWigner,
  FigStateFidelity,
  FigGateFidelity,
  FigGateFidelityOpt,
  FigNlVariance,
  FigNlVarianceOpt,
  TableMsbqc,
  TableMbqc,
};

std::string_view experiment_name(ExperimentId id);
ExperimentId parse_experiment(std::string_view name);
const std::vector<ExperimentId>& all_experiments();

enum class TableMode { Verify, Reproduce };

// Flat key = value configuration. Keys (defaults in brackets):
//
//   experiment                 one of the experiment ids
//   a                          comma list of cubic strengths [0.02, 0.173]
//   r_start, r_stop, r_count   squeeze sweep [0, 1.2, 41]
//   r_values                   explicit comma list; replaces the sweep
//   R, m                       gate input squeeze and outcome [0.5, 0]
//   seed                       RNG seed [1]
//   out                        output directory [results]
//   mode                       verify | reproduce (tables) [verify]
//   n_max                      largest Bloch cutoff for reproduce [5]
//   threads                    evaluation threads, 0 = all cores [0]
//   wigner.a, wigner.r         Wigner panel parameters [0.173, 0.3]
//   wigner.extent, wigner.points
//                              square window [-e, e]^2 and points per axis [6, 201]
//   grid.points, grid.half_extent, fock.cutoff, fock.guard
//   ga.population, ga.generations, ga.tournament, ga.crossover_prob,
//   ga.blend_alpha, ga.mutation_prob, ga.mutation_sigma, ga.mutation_decay,
//   ga.elitism, ga.stall_generations, ga.stall_tolerance, ga.restart,
//   ga.restart_patience, ga.polish, ga.polish_candidates
struct RunConfig {
  ExperimentId experiment = ExperimentId::FigStateFidelity;
  std::vector<double> a{0.02, 0.173};
  double r_start = 0.0;
  double r_stop = 1.2;
  std::size_t r_count = 41;
  std::vector<double> r_values;
  double R = 0.5;
  double m = 0.0;
  std::uint64_t seed = 1;
  std::string out = "results";
  TableMode mode = TableMode::Verify;
  std::size_t n_max = 5;
  unsigned threads = 0;
  double wigner_a = 0.173;
  double wigner_r = 0.3;
  double wigner_extent = 6.0;
  std::size_t wigner_points = 201;
  NumericsConfig numerics;
  GaConfig ga;

  void set(std::string_view key, std::string_view value);
  void apply_text(std::string_view text);
  static RunConfig from_text(std::string_view text);

  // r values of the sweep, sorted ascending
  std::vector<double> sweep() const;
  void validate() const;
  // canonical text; from_text(to_text()) reproduces the config
  std::string to_text() const;
};

}  // namespace cvq
