#include "cvq/optimize/genetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "cvq/error.hpp"
#include "cvq/states/states.hpp"
#include "cvq/util/parallel.hpp"

namespace cvq {
namespace {

constexpr double kWorst = std::numeric_limits<double>::infinity();

double reflect(double x, const Interval& box) {
  const double span = box.hi - box.lo;
  if (span <= 0.0) return box.lo;
  double y = std::fmod(x - box.lo, 2.0 * span);
  if (y < 0.0) y += 2.0 * span;
  return box.lo + (y <= span ? y : 2.0 * span - y);
}

std::vector<Interval> param_boxes(std::size_t n, const BlochBounds& b) {
  std::vector<Interval> boxes;
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(b.theta);
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(b.phi);
  boxes.push_back(b.r_b);
  boxes.push_back(b.d);
  return boxes;
}

struct Individual {
  std::vector<double> x;
  double loss = kWorst;
};

}  // namespace

void GaConfig::validate() const {
  if (population < 2 || tournament < 1 || elitism >= population) {
    throw ConfigError("ga: population must exceed elitism and hold at least two members");
  }
  if (crossover_prob < 0 || crossover_prob > 1 || mutation_prob < 0 || mutation_prob > 1) {
    throw ConfigError("ga: probabilities must lie in [0, 1]");
  }
  if (restart && restart_patience == 0) throw ConfigError("ga: restart patience must be positive");
  if (polish && polish_candidates == 0) throw ConfigError("ga: polish needs at least one candidate");
  if (!(mutation_sigma >= 0) || !(mutation_decay > 0) || !(blend_alpha >= 0)) {
    throw ConfigError("ga: mutation sigma, decay and blend alpha must be non-negative");
  }
}

std::vector<std::string> bloch_param_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("theta_" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("phi_" + std::to_string(i));
  names.emplace_back("r_b");
  names.emplace_back("d");
  return names;
}

std::vector<std::vector<double>> embed_bloch_params(std::size_t n, const std::vector<double>& x) {
  if (x.size() != 2 * n + 2) throw ContractError("embed_bloch_params: wrong vector length");
  std::vector<std::vector<double>> out;
  for (int quarter = 0; quarter < 4; ++quarter) {
    std::vector<double> y(x.begin(), x.begin() + n);
    y.push_back(0.0);
    y.insert(y.end(), x.begin() + n, x.begin() + 2 * n);
    y.push_back(quarter * 0.5 * std::numbers::pi);
    y.push_back(x[2 * n]);
    y.push_back(x[2 * n + 1]);
    out.push_back(std::move(y));
  }
  return out;
}

StateSpec bloch_spec_from_params(std::size_t n, const std::vector<double>& x) {
  if (x.size() != 2 * n + 2) throw ContractError("bloch params: wrong vector length");
  std::vector<double> theta(x.begin(), x.begin() + n);
  std::vector<double> phi(x.begin() + n, x.begin() + 2 * n);
  return StateSpec::bloch(std::move(theta), std::move(phi), x[2 * n], x[2 * n + 1]);
}

QGrid bloch_grid(std::size_t n, const BlochBounds& bounds, const NumericsConfig& numerics) {
  StateSpec widest = StateSpec::bloch(std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                                      std::max(-bounds.r_b.lo, bounds.r_b.hi), 0.0);
  return grid_for(widest, 0.0, numerics);
}

double evaluate_bloch(const StateSpec& spec, const Objective& objective, const QGrid& grid,
                      const NumericsConfig& numerics) {
  const BoundObjective metric(objective, grid, numerics);
  return metric(make_state(spec, grid, numerics));
}

OptimizationRecord optimize_bloch_ga(std::size_t n, const Objective& objective,
                                     std::uint64_t seed, const GaConfig& cfg,
                                     const NumericsConfig& numerics, const BlochBounds& bounds,
                                     const std::vector<std::vector<double>>& warm_starts) {
  cfg.validate();
  objective.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Interval> boxes = param_boxes(n, bounds);
  const std::size_t dim = boxes.size();
  for (const auto& w : warm_starts) {
    if (w.size() != dim) throw ContractError("optimize_bloch_ga: warm start has the wrong length");
    for (std::size_t g = 0; g < dim; ++g)
      if (!(w[g] >= boxes[g].lo && w[g] <= boxes[g].hi))
        throw ContractError("optimize_bloch_ga: warm start outside the bounds");
  }
  const QGrid grid = bloch_grid(n, bounds, numerics);
  const BoundObjective metric(objective, grid, numerics);

  std::size_t evaluations = 0;
  auto loss_of = [&](const std::vector<double>& x) {
    try {
      return objective.loss(metric(make_state(bloch_spec_from_params(n, x), grid, numerics)));
    } catch (const Error&) {
      return kWorst;
    }
  };
  auto evaluate = [&](std::vector<Individual>& pop, std::size_t first) {
    const std::size_t count = pop.size() - first;
    const auto losses = parallel_map<double>(
        count, [&](std::size_t k) { return loss_of(pop[first + k].x); }, cfg.threads);
    for (std::size_t k = 0; k < count; ++k) pop[first + k].loss = losses[k];
    evaluations += count;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // stable ranking: loss, then index
  auto rank = [](std::vector<Individual>& p) {
    std::stable_sort(p.begin(), p.end(),
                     [](const Individual& a, const Individual& b) { return a.loss < b.loss; });
  };
  auto fresh_population = [&](bool with_identity) {
    std::vector<Individual> p(cfg.population);
    for (auto& ind : p) {
      ind.x.resize(dim);
      for (std::size_t g = 0; g < dim; ++g)
        ind.x[g] = boxes[g].lo + unit(rng) * (boxes[g].hi - boxes[g].lo);
    }
    // the identity (vacuum) joins the first generation so the result can
    // never fall below it
    if (with_identity) {
      std::fill(p.front().x.begin(), p.front().x.end(), 0.0);
      for (std::size_t k = 0; k < warm_starts.size() && k + 1 < p.size(); ++k) p[k + 1].x = warm_starts[k];
    }
    evaluate(p, 0);
    rank(p);
    return p;
  };
  std::vector<Individual> pop = fresh_population(true);

  OptimizationRecord rec;
  rec.objective = objective.id();
  rec.method = "genetic+nelder_mead";
  rec.names = bloch_param_names(n);
  rec.seed = seed;
  rec.numerics = numerics;
  rec.grid_half_extent = grid.half_extent();
  {
    std::vector<double> identity(dim, 0.0);
    const double l = loss_of(identity);
    ++evaluations;
    rec.baseline = objective.value_from_loss(l);
  }
  rec.trace.push_back(objective.value_from_loss(pop.front().loss));

  auto tournament = [&](const std::vector<Individual>& p) -> const Individual& {
    std::size_t best = p.size();
    for (std::size_t k = 0; k < cfg.tournament; ++k) {
      const auto idx = static_cast<std::size_t>(unit(rng) * static_cast<double>(p.size())) % p.size();
      // population is ranked, so the lower index wins ties and losses alike
      best = std::min(best, idx);
    }
    return p[best];
  };

  // champions of finished epochs; a stalled epoch restarts from a fresh
  // random population while budget remains
  std::vector<Individual> archive;
  std::size_t idle_epochs = 0;
  bool champion_archived = false;
  double global_best = pop.front().loss;
  double sigma = cfg.mutation_sigma;
  double stall_ref = pop.front().loss;
  std::size_t stall = 0;
  std::size_t generation = 0;
  while (generation < cfg.generations) {
    std::vector<Individual> next(pop.begin(), pop.begin() + static_cast<long>(cfg.elitism));
    while (next.size() < cfg.population) {
      Individual a = tournament(pop);
      Individual b = tournament(pop);
      if (unit(rng) < cfg.crossover_prob) {
        for (std::size_t g = 0; g < dim; ++g) {
          const double lo = std::min(a.x[g], b.x[g]);
          const double hi = std::max(a.x[g], b.x[g]);
          const double ext = cfg.blend_alpha * (hi - lo);
          const double ua = unit(rng), ub = unit(rng);
          a.x[g] = reflect(lo - ext + ua * (hi - lo + 2.0 * ext), boxes[g]);
          b.x[g] = reflect(lo - ext + ub * (hi - lo + 2.0 * ext), boxes[g]);
        }
      }
      for (Individual* child : {&a, &b}) {
        for (std::size_t g = 0; g < dim; ++g) {
          if (unit(rng) < cfg.mutation_prob) {
            const double span = boxes[g].hi - boxes[g].lo;
            child->x[g] = reflect(child->x[g] + sigma * span * gauss(rng), boxes[g]);
          }
        }
        child->loss = kWorst;
        if (next.size() < cfg.population) next.push_back(std::move(*child));
      }
    }
    evaluate(next, cfg.elitism);
    rank(next);
    pop = std::move(next);
    ++generation;
    sigma *= cfg.mutation_decay;
    global_best = std::min(global_best, pop.front().loss);
    rec.trace.push_back(objective.value_from_loss(global_best));

    if (stall_ref - pop.front().loss > cfg.stall_tolerance) {
      stall_ref = pop.front().loss;
      stall = 0;
    } else if (++stall >= cfg.stall_generations) {
      const bool improved = archive.empty() || pop.front().loss < archive.front().loss - cfg.stall_tolerance;
      idle_epochs = improved ? 0 : idle_epochs + 1;
      archive.push_back(pop.front());
      rank(archive);
      champion_archived = true;
      // a restart needs room for at least one more stall window
      if (!cfg.restart || idle_epochs >= cfg.restart_patience ||
          cfg.generations - generation < cfg.stall_generations)
        break;
      pop = fresh_population(false);
      champion_archived = false;
      global_best = std::min(global_best, pop.front().loss);
      sigma = cfg.mutation_sigma;
      stall_ref = pop.front().loss;
      stall = 0;
    }
  }
  if (!champion_archived) archive.push_back(pop.front());
  rank(archive);

  std::vector<double> best_x = archive.front().x;
  double best = archive.front().loss;
  if (!std::isfinite(best)) {
    throw GridError("optimize_bloch_ga: no candidate could be evaluated", 2.0 * grid.half_extent());
  }
  if (cfg.polish) {
    std::vector<double> lo(dim), hi(dim), steps(dim);
    for (std::size_t g = 0; g < dim; ++g) {
      lo[g] = boxes[g].lo;
      hi[g] = boxes[g].hi;
      steps[g] = 0.05 * (hi[g] - lo[g]);
    }
    NelderMeadOptions nm;
    nm.ftol = cfg.polish_tolerance;
    nm.max_evals = cfg.polish_evals;
    const std::size_t count = std::min(cfg.polish_candidates, archive.size());
    for (std::size_t k = 0; k < count; ++k) {
      const NelderMeadResult r = nelder_mead(loss_of, archive[k].x, steps, lo, hi, nm);
      evaluations += r.evaluations;
      if (r.fx < best) {
        best = r.fx;
        best_x = r.x;
      }
    }
    rec.trace.push_back(objective.value_from_loss(best));
  }

  rec.params = best_x;
  rec.spec = bloch_spec_from_params(n, best_x);
  rec.value = objective.value_from_loss(best);
  rec.iterations = generation;
  rec.evaluations = evaluations;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace cvq
