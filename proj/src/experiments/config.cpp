#include "cvq/experiments/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cvq/error.hpp"
#include "cvq/util/kv.hpp"

namespace cvq {
namespace {

constexpr std::array<std::pair<ExperimentId, std::string_view>, 8> kExperiments{{
    {ExperimentId::FigWigner, "fig_wigner"},
    {ExperimentId::FigStateFidelity, "fig_state_fidelity"},
    {ExperimentId::FigGateFidelity, "fig_gate_fidelity"},
    {ExperimentId::FigGateFidelityOpt, "fig_gate_fidelity_opt"},
    {ExperimentId::FigNlVariance, "fig_nl_variance"},
    {ExperimentId::FigNlVarianceOpt, "fig_nl_variance_opt"},
    {ExperimentId::TableMsbqc, "table_msbqc"},
    {ExperimentId::TableMbqc, "table_mbqc"},
}};

std::size_t to_size(std::string_view key, std::string_view value) {
  const long long v = kv::to_int(key, value);
  if (v < 0) throw ConfigError("key '" + std::string(key) + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = kv::trim(value);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("key '" + std::string(key) + "' expects true or false");
}

}  // namespace

std::string_view experiment_name(ExperimentId id) {
  for (const auto& [e, n] : kExperiments)
    if (e == id) return n;
  return "unknown";
}

ExperimentId parse_experiment(std::string_view name) {
  for (const auto& [e, n] : kExperiments)
    if (n == name) return e;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

const std::vector<ExperimentId>& all_experiments() {
  static const std::vector<ExperimentId> ids = [] {
    std::vector<ExperimentId> v;
    for (const auto& [e, n] : kExperiments) v.push_back(e);
    return v;
  }();
  return ids;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  const std::string v = kv::trim(value);
  if (key == "experiment") experiment = parse_experiment(v);
  else if (key == "a") a = kv::to_doubles(key, v);
  else if (key == "r_start") r_start = kv::to_double(key, v);
  else if (key == "r_stop") r_stop = kv::to_double(key, v);
  else if (key == "r_count") r_count = to_size(key, v);
  else if (key == "r_values") r_values = kv::to_doubles(key, v);
  else if (key == "R") R = kv::to_double(key, v);
  else if (key == "m") m = kv::to_double(key, v);
  else if (key == "seed") seed = static_cast<std::uint64_t>(to_size(key, v));
  else if (key == "out") out = v;
  else if (key == "mode") {
    if (v == "verify") mode = TableMode::Verify;
    else if (v == "reproduce") mode = TableMode::Reproduce;
    else throw ConfigError("mode must be verify or reproduce");
  } else if (key == "n_max") n_max = to_size(key, v);
  else if (key == "threads") threads = static_cast<unsigned>(to_size(key, v));
  else if (key == "wigner.a") wigner_a = kv::to_double(key, v);
  else if (key == "wigner.r") wigner_r = kv::to_double(key, v);
  else if (key == "wigner.extent") wigner_extent = kv::to_double(key, v);
  else if (key == "wigner.points") wigner_points = to_size(key, v);
  else if (key == "grid.points") numerics.grid_points = to_size(key, v);
  else if (key == "grid.half_extent") numerics.half_extent = kv::to_double(key, v);
  else if (key == "fock.cutoff") numerics.fock_cutoff = to_size(key, v);
  else if (key == "fock.guard") numerics.fock_guard = to_size(key, v);
  else if (key == "ga.population") ga.population = to_size(key, v);
  else if (key == "ga.generations") ga.generations = to_size(key, v);
  else if (key == "ga.tournament") ga.tournament = to_size(key, v);
  else if (key == "ga.crossover_prob") ga.crossover_prob = kv::to_double(key, v);
  else if (key == "ga.blend_alpha") ga.blend_alpha = kv::to_double(key, v);
  else if (key == "ga.mutation_prob") ga.mutation_prob = kv::to_double(key, v);
  else if (key == "ga.mutation_sigma") ga.mutation_sigma = kv::to_double(key, v);
  else if (key == "ga.mutation_decay") ga.mutation_decay = kv::to_double(key, v);
  else if (key == "ga.elitism") ga.elitism = to_size(key, v);
  else if (key == "ga.stall_generations") ga.stall_generations = to_size(key, v);
  else if (key == "ga.stall_tolerance") ga.stall_tolerance = kv::to_double(key, v);
  else if (key == "ga.restart") ga.restart = to_bool(key, v);
  else if (key == "ga.restart_patience") ga.restart_patience = to_size(key, v);
  else if (key == "ga.polish") ga.polish = to_bool(key, v);
  else if (key == "ga.polish_candidates") ga.polish_candidates = to_size(key, v);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

void RunConfig::apply_text(std::string_view text) {
  for (const auto& [k, v] : kv::parse(text)) set(k, v);
}

RunConfig RunConfig::from_text(std::string_view text) {
  RunConfig c;
  c.apply_text(text);
  c.validate();
  return c;
}

std::vector<double> RunConfig::sweep() const {
  std::vector<double> r = r_values;
  if (r.empty()) {
    r.resize(r_count);
    for (std::size_t k = 0; k < r_count; ++k) {
      r[k] = r_start + (r_stop - r_start) * static_cast<double>(k) / static_cast<double>(r_count - 1);
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

void RunConfig::validate() const {
  if (r_values.empty() && r_count < 2) throw ConfigError("r_count must be at least 2");
  if (a.empty()) throw ConfigError("a list is empty");
  for (double v : a)
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("a values must be finite and >= 0");
  for (double v : sweep())
    if (!std::isfinite(v)) throw ConfigError("r values must be finite");
  if (m != 0.0) throw ConfigError("only m = 0 is supported");
  if (numerics.grid_points < 16 || numerics.grid_points % 2) {
    throw ConfigError("grid.points must be an even number >= 16");
  }
  if (numerics.fock_guard >= numerics.fock_cutoff) throw ConfigError("fock.guard must be below fock.cutoff");
  if (wigner_points < 2 || !(wigner_extent > 0.0)) throw ConfigError("bad Wigner window");
  ga.validate();
}

std::string RunConfig::to_text() const {
  using kv::format;
  std::string s;
  auto line = [&](std::string_view k, const std::string& v) {
    s += std::string(k) + " = " + v + "\n";
  };
  line("experiment", std::string(experiment_name(experiment)));
  line("a", format(a));
  line("r_start", format(r_start));
  line("r_stop", format(r_stop));
  line("r_count", std::to_string(r_count));
  if (!r_values.empty()) line("r_values", format(r_values));
  line("R", format(R));
  line("m", format(m));
  line("seed", std::to_string(seed));
  line("out", out);
  line("mode", mode == TableMode::Verify ? "verify" : "reproduce");
  line("n_max", std::to_string(n_max));
  line("threads", std::to_string(threads));
  line("wigner.a", format(wigner_a));
  line("wigner.r", format(wigner_r));
  line("wigner.extent", format(wigner_extent));
  line("wigner.points", std::to_string(wigner_points));
  line("grid.points", std::to_string(numerics.grid_points));
  line("grid.half_extent", format(numerics.half_extent));
  line("fock.cutoff", std::to_string(numerics.fock_cutoff));
  line("fock.guard", std::to_string(numerics.fock_guard));
  line("ga.population", std::to_string(ga.population));
  line("ga.generations", std::to_string(ga.generations));
  line("ga.tournament", std::to_string(ga.tournament));
  line("ga.crossover_prob", format(ga.crossover_prob));
  line("ga.blend_alpha", format(ga.blend_alpha));
  line("ga.mutation_prob", format(ga.mutation_prob));
  line("ga.mutation_sigma", format(ga.mutation_sigma));
  line("ga.mutation_decay", format(ga.mutation_decay));
  line("ga.elitism", std::to_string(ga.elitism));
  line("ga.stall_generations", std::to_string(ga.stall_generations));
  line("ga.stall_tolerance", format(ga.stall_tolerance));
  line("ga.restart", ga.restart ? "true" : "false");
  line("ga.restart_patience", std::to_string(ga.restart_patience));
  line("ga.polish", ga.polish ? "true" : "false");
  line("ga.polish_candidates", std::to_string(ga.polish_candidates));
  return s;
}

}  // namespace cvq
