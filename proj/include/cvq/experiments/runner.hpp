#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvq/experiments/config.hpp"
#include "cvq/metrics/report.hpp"
#include "cvq/metrics/wigner.hpp"
#include "cvq/optimize/record.hpp"
#include "cvq/optimize/tables.hpp"

namespace cvq {

// Schemes: phi_G (Gaussian benchmark), phi_1 (Fock truncation), phi_2
// (operator truncation), phi_3 (fitted trisqueezed), phi_c (exact cubic
// phase). A trailing "_opt" marks the Gaussian-optimized variant.
struct ResultRow {
  std::string scheme;
  double a = 0.0;
  double r = 0.0;
  MetricReport report;
  std::string error;
  std::optional<OptimizationRecord> record;
};

struct TableEntry {
  TableId table = TableId::Msbqc;
  std::size_t n = 0;
  double printed = 0.0;
  double value = 0.0;
  double tolerance = 0.0;
  // verify: |value - printed| <= tol; reproduce: value no worse than printed -+ tol
  bool within = false;
  StateSpec spec;
  std::string error;
  std::optional<OptimizationRecord> record;
};

struct WignerPanel {
  std::string scheme;
  StateSpec spec;
  WignerGrid grid;
  double integral = 0.0;
  std::string error;
};

struct ResultSet {
  RunConfig config;
  std::vector<ResultRow> rows;
  std::vector<TableEntry> table;
  std::vector<WignerPanel> panels;

  std::size_t error_count() const;
};

ResultSet run_experiment(const RunConfig& cfg);
ResultSet run_state_fidelity_sweep(const RunConfig& cfg);
ResultSet run_gate_fidelity_sweep(const RunConfig& cfg, bool optimized);
ResultSet run_variance_sweep(const RunConfig& cfg, bool optimized);
ResultSet run_table(const RunConfig& cfg, TableId which, TableMode mode);
ResultSet run_wigner(const RunConfig& cfg);

// One sweep point of cfg.experiment, computed from scratch. Sweeps are built
// from this, so a stored row can be re-derived from the manifest.
ResultRow evaluate_point(const RunConfig& cfg, const std::string& scheme, double a, double r);

// Base state of a scheme (phi_3 runs the trisqueezed fit; results are memoized).
StateSpec scheme_spec(const std::string& scheme, double a, double r, const NumericsConfig& numerics);

// CSV series plus manifest.json; returns the file names written.
std::vector<std::string> write_result_set(const ResultSet& rs, const std::string& dir,
                                          const std::string& started_at);

}  // namespace cvq
