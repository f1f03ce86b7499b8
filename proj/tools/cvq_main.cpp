// cvq: reproduce the figure series and tables.
//
//   cvq <experiment> [--config file] [--seed n] [--out dir] [--mode verify|reproduce]
//                    [--override key=value]...
//
// CVQ_OUT_DIR sets the output directory when --out is absent.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cvq/error.hpp"
#include "cvq/experiments/config.hpp"
#include "cvq/experiments/output.hpp"
#include "cvq/experiments/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cvq::ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* describe(cvq::ExperimentId id) {
  using cvq::ExperimentId;
  switch (id) {
    case ExperimentId::FigWigner: return "Wigner panels for each scheme";
    case ExperimentId::FigStateFidelity: return "state fidelity against the exact resource over r";
    case ExperimentId::FigGateFidelity: return "gate fidelity over r";
    case ExperimentId::FigGateFidelityOpt: return "gate fidelity over r after Gaussian post-optimization";
    case ExperimentId::FigNlVariance: return "nonlinear quadrature variance over r";
    case ExperimentId::FigNlVarianceOpt: return "variance over r after Gaussian post-optimization";
    case ExperimentId::TableMsbqc: return "Bloch superposition table, gate fidelity objective";
    case ExperimentId::TableMbqc: return "Bloch superposition table, variance objective";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cvq: cubic phase resource state workbench"};
  app.require_subcommand(1);

  std::string config_path, out_dir, mode;
  std::uint64_t seed = 0;
  std::vector<std::string> overrides;
  for (auto id : cvq::all_experiments()) {
    auto* sub = app.add_subcommand(std::string(cvq::experiment_name(id)), describe(id));
    sub->add_option("--config", config_path, "key = value config file");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--override", overrides, "key=value, repeatable");
    if (id == cvq::ExperimentId::TableMsbqc || id == cvq::ExperimentId::TableMbqc) {
      sub->add_option("--mode", mode, "verify or reproduce")->check(CLI::IsMember({"verify", "reproduce"}));
    }
  }
  CLI11_PARSE(app, argc, argv);

  try {
    auto* sub = app.get_subcommands().front();
    cvq::RunConfig cfg;
    if (!config_path.empty()) cfg.apply_text(read_file(config_path));
    cfg.experiment = cvq::parse_experiment(sub->get_name());
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw cvq::ConfigError("--override expects key=value, got '" + o + "'");
      cfg.set(o.substr(0, eq), o.substr(eq + 1));
    }
    if (sub->count("--seed")) cfg.seed = seed;
    if (!mode.empty()) cfg.set("mode", mode);
    if (!out_dir.empty()) cfg.out = out_dir;
    else if (const char* env = std::getenv("CVQ_OUT_DIR"); env && *env) cfg.out = env;
    cfg.validate();

    const std::string started = cvq::utc_timestamp();
    const cvq::ResultSet rs = cvq::run_experiment(cfg);
    const auto files = cvq::write_result_set(rs, cfg.out, started);
    for (const auto& f : files) std::cout << cfg.out << "/" << f << "\n";
    const std::size_t errors = rs.error_count();
    if (errors) {
      std::cerr << errors << " row(s) carry an error annotation\n";
      for (const auto& r : rs.rows)
        if (!r.error.empty()) std::cerr << "  " << r.scheme << " a=" << r.a << " r=" << r.r << ": " << r.error << "\n";
      for (const auto& t : rs.table)
        if (!t.error.empty()) std::cerr << "  N=" << t.n << ": " << t.error << "\n";
      for (const auto& p : rs.panels)
        if (!p.error.empty()) std::cerr << "  " << p.scheme << ": " << p.error << "\n";
      return 1;
    }
    return 0;
  } catch (const cvq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
