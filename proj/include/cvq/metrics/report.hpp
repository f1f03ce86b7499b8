#pragma once

#include <string>
#include <vector>

#include "cvq/metrics/metrics.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/states/gaussian_op.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

enum class MetricId { StateFidelity, GateFidelity, NlVariance };

std::string_view metric_name(MetricId id);
MetricId parse_metric(std::string_view name);

// One evaluated metric with everything needed to recompute it.
struct MetricReport {
  MetricId metric = MetricId::StateFidelity;
  double value = 0.0;
  StateSpec spec;
  GaussianOp op;
  GateContext context;
  double grid_half_extent = 0.0;
  std::size_t grid_points = 0;
  std::size_t fock_cutoff = 0;

  void check() const;

  // Flat field list shared by the CSV header and the JSON object.
  static std::vector<std::string> field_names();
  std::vector<std::string> field_values() const;
  std::string to_json() const;
};

}  // namespace cvq
