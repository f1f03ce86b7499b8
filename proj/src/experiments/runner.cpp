#include "cvq/experiments/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <json.hpp>

#include "cvq/error.hpp"
#include "cvq/experiments/output.hpp"
#include "cvq/optimize/gaussian_search.hpp"
#include "cvq/optimize/genetic.hpp"
#include "cvq/optimize/trisqueeze_fit.hpp"
#include "cvq/simd/kernels.hpp"
#include "cvq/states/states.hpp"
#include "cvq/util/kv.hpp"
#include "cvq/util/parallel.hpp"

#ifndef CVQ_VERSION
#define CVQ_VERSION "0.0.0"
#endif

namespace cvq {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kSchemes{"phi_G", "phi_1", "phi_2", "phi_3"};

bool ends_with(const std::string& s, std::string_view tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

bool is_optimized(const std::string& scheme) { return ends_with(scheme, "_opt"); }

std::string base_scheme(const std::string& scheme) {
  return is_optimized(scheme) ? scheme.substr(0, scheme.size() - 4) : scheme;
}

Objective objective_for(const RunConfig& cfg, double a, double r) {
  switch (cfg.experiment) {
    case ExperimentId::FigStateFidelity: return Objective::state_fidelity(StateSpec::cubic_phase(a, r));
    case ExperimentId::FigGateFidelity:
    case ExperimentId::FigGateFidelityOpt: return Objective::gate_fidelity(a, cfg.R, cfg.m);
    case ExperimentId::FigNlVariance:
    case ExperimentId::FigNlVarianceOpt: return Objective::nl_variance(a);
    default: throw ContractError("evaluate_point: experiment has no sweep points");
  }
}

std::vector<std::string> schemes_for(ExperimentId id) {
  std::vector<std::string> s = kSchemes;
  if (id == ExperimentId::FigGateFidelityOpt || id == ExperimentId::FigNlVarianceOpt) {
    for (const auto& b : kSchemes) s.push_back(b + "_opt");
  }
  if (id == ExperimentId::FigNlVariance || id == ExperimentId::FigNlVarianceOpt) s.push_back("phi_c");
  return s;
}

struct FitKey {
  double a, r;
  std::size_t points, cutoff, guard;
  double extent;
  auto operator<=>(const FitKey&) const = default;
};

ResultSet run_sweep(const RunConfig& cfg) {
  cfg.validate();
  ResultSet rs;
  rs.config = cfg;
  std::vector<double> as = cfg.a;
  std::sort(as.begin(), as.end());
  const std::vector<double> rs_sweep = cfg.sweep();
  struct Task {
    std::string scheme;
    double a, r;
  };
  std::vector<Task> tasks;
  for (const auto& scheme : schemes_for(cfg.experiment))
    for (double a : as)
      for (double r : rs_sweep) tasks.push_back({scheme, a, r});
  rs.rows = parallel_map<ResultRow>(
      tasks.size(), [&](std::size_t k) { return evaluate_point(cfg, tasks[k].scheme, tasks[k].a, tasks[k].r); },
      cfg.threads);
  return rs;
}

std::string series_file(const ResultSet& rs, const std::string& scheme, double a) {
  return std::string(experiment_name(rs.config.experiment)) + "__" + scheme + "__a" + kv::format(a) + ".csv";
}

}  // namespace

std::size_t ResultSet::error_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += !r.error.empty();
  for (const auto& t : table) n += !t.error.empty();
  for (const auto& p : panels) n += !p.error.empty();
  return n;
}

StateSpec scheme_spec(const std::string& scheme, double a, double r, const NumericsConfig& numerics) {
  if (scheme == "phi_G") return StateSpec::gaussian_squeezed(r);
  if (scheme == "phi_1") return StateSpec::fock_truncation(a, r);
  if (scheme == "phi_2") return StateSpec::operator_truncation(a, r);
  if (scheme == "phi_c") return StateSpec::cubic_phase(a, r);
  if (scheme == "phi_3") {
    static std::mutex mu;
    static std::map<FitKey, StateSpec> memo;
    const FitKey key{a, r, numerics.grid_points, numerics.fock_cutoff, numerics.fock_guard,
                     numerics.half_extent};
    {
      std::lock_guard lock(mu);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const StateSpec spec = fit_trisqueezed(a, r, numerics).spec;
    std::lock_guard lock(mu);
    memo.emplace(key, spec);
    return spec;
  }
  throw ConfigError("unknown scheme '" + scheme + "'");
}

ResultRow evaluate_point(const RunConfig& cfg, const std::string& scheme, double a, double r) {
  ResultRow row;
  row.scheme = scheme;
  row.a = a;
  row.r = r;
  const Objective objective = objective_for(cfg, a, r);
  row.report.metric = objective.metric();
  row.report.context = objective.context;
  row.report.fock_cutoff = cfg.numerics.fock_cutoff;
  row.report.grid_points = cfg.numerics.grid_points;
  row.report.value = kNaN;
  try {
    const std::string base = base_scheme(scheme);
    if (scheme == "phi_c" && objective.kind == ObjectiveKind::NlVarianceMin) {
      // analytic reference curve
      row.report.spec = StateSpec::cubic_phase(a, r);
      row.report.value = 0.5 * std::exp(-2.0 * r);
      return row;
    }
    row.report.spec = scheme_spec(base, a, r, cfg.numerics);
    GaussianSearchOptions opt;
    opt.numerics = cfg.numerics;
    if (objective.kind == ObjectiveKind::StateFidelityMax) {
      // the target's own grid, as used by the trisqueezed fit
      const QGrid grid = grid_for(*objective.target, 0.5, cfg.numerics);
      const BoundObjective metric(objective, grid, cfg.numerics);
      row.report.grid_half_extent = grid.half_extent();
      row.report.value = metric(make_state(row.report.spec, grid, cfg.numerics));
    } else if (is_optimized(scheme)) {
      OptimizationRecord rec = optimize_gaussian(row.report.spec, objective, opt);
      row.report.value = rec.value;
      row.report.op = rec.op;
      row.report.grid_half_extent = rec.grid_half_extent;
      row.record = std::move(rec);
    } else {
      opt.dof = kDofS | kDofT;
      row.report.value = evaluate_with_op(row.report.spec, objective, GaussianOp{}, opt);
      row.report.grid_half_extent = grid_for(row.report.spec, 1.5, cfg.numerics).half_extent();
    }
    row.report.check();
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

ResultSet run_state_fidelity_sweep(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.experiment = ExperimentId::FigStateFidelity;
  return run_sweep(c);
}

ResultSet run_gate_fidelity_sweep(const RunConfig& cfg, bool optimized) {
  RunConfig c = cfg;
  c.experiment = optimized ? ExperimentId::FigGateFidelityOpt : ExperimentId::FigGateFidelity;
  return run_sweep(c);
}

ResultSet run_variance_sweep(const RunConfig& cfg, bool optimized) {
  RunConfig c = cfg;
  c.experiment = optimized ? ExperimentId::FigNlVarianceOpt : ExperimentId::FigNlVariance;
  return run_sweep(c);
}

ResultSet run_table(const RunConfig& cfg, TableId which, TableMode mode) {
  cfg.validate();
  ResultSet rs;
  rs.config = cfg;
  rs.config.experiment = which == TableId::Msbqc ? ExperimentId::TableMsbqc : ExperimentId::TableMbqc;
  rs.config.mode = mode;
  const Objective objective = table_objective(which);
  const double tol = table_tolerance(which);
  const auto& rows = table_rows(which);

  if (mode == TableMode::Verify) {
    rs.table = parallel_map<TableEntry>(
        rows.size(),
        [&](std::size_t k) {
          const TableRow& row = rows[k];
          TableEntry e;
          e.table = which;
          e.n = row.n;
          e.printed = row.value;
          e.tolerance = tol;
          e.value = kNaN;
          try {
            e.spec = row_spec(row);
            e.value = evaluate_table_row(row, objective, cfg.numerics);
            e.within = std::abs(e.value - e.printed) <= tol;
          } catch (const Error& err) {
            e.error = err.what();
          }
          return e;
        },
        cfg.threads);
    return rs;
  }

  GaConfig ga = cfg.ga;
  ga.threads = cfg.threads;
  // each cutoff starts from the previous optimum embedded one level up, so
  // the best value can only improve with n
  std::vector<double> below;
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    TableEntry e;
    e.table = which;
    e.n = n;
    e.tolerance = tol;
    e.value = kNaN;
    e.printed = n < rows.size() ? rows[n].value : kNaN;
    try {
      const auto warm = below.empty() ? std::vector<std::vector<double>>{} : embed_bloch_params(n - 1, below);
      OptimizationRecord rec = optimize_bloch_ga(n, objective, cfg.seed, ga, cfg.numerics, {}, warm);
      below = rec.params;
      e.value = rec.value;
      e.spec = rec.spec;
      e.within = std::isnan(e.printed) ? false
                                       : objective.no_worse(e.value, e.printed, tol);
      e.record = std::move(rec);
    } catch (const Error& err) {
      e.error = err.what();
      below.clear();
    }
    rs.table.push_back(std::move(e));
  }
  return rs;
}

ResultSet run_wigner(const RunConfig& cfg) {
  cfg.validate();
  ResultSet rs;
  rs.config = cfg;
  rs.config.experiment = ExperimentId::FigWigner;
  const double a = cfg.wigner_a, r = cfg.wigner_r;
  const std::vector<double> axis = uniform_axis(-cfg.wigner_extent, cfg.wigner_extent, cfg.wigner_points);
  const std::vector<std::string> schemes{"phi_c", "phi_1", "phi_2", "phi_3", "phi_G"};
  rs.panels = parallel_map<WignerPanel>(
      schemes.size(),
      [&](std::size_t k) {
        WignerPanel p;
        p.scheme = schemes[k];
        try {
          p.spec = scheme_spec(p.scheme, a, r, cfg.numerics);
          const QGrid grid = grid_for(p.spec, 0.5, cfg.numerics);
          p.grid = wigner(make_state(p.spec, grid, cfg.numerics), axis, axis);
          p.integral = p.grid.integral();
        } catch (const Error& e) {
          p.error = e.what();
        }
        return p;
      },
      cfg.threads);
  return rs;
}

ResultSet run_experiment(const RunConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentId::FigWigner: return run_wigner(cfg);
    case ExperimentId::TableMsbqc: return run_table(cfg, TableId::Msbqc, cfg.mode);
    case ExperimentId::TableMbqc: return run_table(cfg, TableId::Mbqc, cfg.mode);
    default: return run_sweep(cfg);
  }
}

std::vector<std::string> write_result_set(const ResultSet& rs, const std::string& dir,
                                          const std::string& started_at) {
  OutputDir out(dir);
  const std::string exp(experiment_name(rs.config.experiment));
  using kv::format;

  // sweep series, one file per (scheme, a)
  std::vector<std::string> header{"scheme", "a", "r", "metric", "value", "error"};
  const auto prov = MetricReport::field_names();
  header.insert(header.end(), prov.begin() + 2, prov.end());
  std::map<std::string, std::string> series;
  std::vector<std::string> order;
  std::string records;
  for (const auto& row : rs.rows) {
    const std::string name = series_file(rs, row.scheme, row.a);
    if (!series.count(name)) {
      series[name] = csv::line(header);
      order.push_back(name);
    }
    std::vector<std::string> f{row.scheme, format(row.a), format(row.r),
                               std::string(metric_name(row.report.metric)),
                               std::isnan(row.report.value) ? "nan" : format(row.report.value), row.error};
    const auto vals = row.report.field_values();
    f.insert(f.end(), vals.begin() + 2, vals.end());
    series[name] += csv::line(f);
    if (row.record) {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(row.record->to_json());
      j["scheme"] = row.scheme;
      j["a"] = row.a;
      j["r"] = row.r;
      records += j.dump() + "\n";
    }
  }
  for (const auto& name : order) out.write(name, series[name]);

  if (!rs.table.empty()) {
    const bool verify = rs.config.mode == TableMode::Verify;
    std::string body = csv::line({"N", "printed", "value", "delta", "tolerance", "within_tolerance", "q",
                                  "r", "theta", "phi", "error"});
    for (const auto& t : rs.table) {
      body += csv::line({std::to_string(t.n), format(t.printed), format(t.value),
                         format(t.value - t.printed), format(t.tolerance), t.within ? "true" : "false",
                         format(t.spec.d), format(t.spec.r_b), format(t.spec.theta), format(t.spec.phi),
                         t.error});
      if (t.record) records += t.record->to_json() + "\n";
    }
    out.write(exp + (verify ? "__verify.csv" : "__reproduce_seed" + std::to_string(rs.config.seed) + ".csv"),
              body);
  }

  if (!rs.panels.empty()) {
    const auto& axis = rs.panels.front().grid.q_axis;
    std::string ax;
    for (double v : axis) ax += format(v) + "\n";
    out.write(exp + "__q_axis.csv", ax);
    out.write(exp + "__p_axis.csv", ax);
    std::string summary = csv::line({"scheme", "min_W", "integral", "error", "state"});
    for (const auto& p : rs.panels) {
      summary += csv::line({p.scheme, p.error.empty() ? format(p.grid.min()) : "nan", format(p.integral),
                            p.error, p.spec.serialize()});
      if (!p.error.empty()) continue;
      std::string m;
      const std::size_t np = p.grid.p_axis.size();
      for (std::size_t i = 0; i < p.grid.q_axis.size(); ++i) {
        for (std::size_t j = 0; j < np; ++j) {
          if (j) m += ',';
          m += format(p.grid.at(i, j));
        }
        m += '\n';
      }
      out.write(exp + "__" + p.scheme + "__W.csv", m);
    }
    out.write(exp + "__summary.csv", summary);
  }
  if (!records.empty()) out.write(exp + "__records.jsonl", records);

  nlohmann::ordered_json man;
  man["experiment"] = exp;
  man["code_version"] = CVQ_VERSION;
  man["started_at"] = started_at;
  man["finished_at"] = utc_timestamp();
  man["config"] = rs.config.to_text();
  man["config_hash"] = config_hash(rs.config.to_text());
  man["simd_kernels"] = simd::active_kernels().name;
  man["rows"] = rs.rows.size() + rs.table.size() + rs.panels.size();
  man["errors"] = rs.error_count();
  man["files"] = out.files();
  out.write("manifest.json", man.dump(2) + "\n");
  return out.files();
}

}  // namespace cvq
