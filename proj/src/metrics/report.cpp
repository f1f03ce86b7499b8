#include "cvq/metrics/report.hpp"

#include <json.hpp>

#include "cvq/error.hpp"
#include "cvq/util/kv.hpp"

namespace cvq {

std::string_view metric_name(MetricId id) {
  switch (id) {
    case MetricId::StateFidelity: return "state_fidelity";
    case MetricId::GateFidelity: return "gate_fidelity";
    case MetricId::NlVariance: return "nl_variance";
  }
  return "unknown";
}

MetricId parse_metric(std::string_view name) {
  for (MetricId id : {MetricId::StateFidelity, MetricId::GateFidelity, MetricId::NlVariance})
    if (metric_name(id) == name) return id;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

void MetricReport::check() const {
  if (metric == MetricId::NlVariance) {
    if (!(value > 0.0)) throw AccuracyError("metric report: variance must be positive");
  } else if (!(value >= 0.0 && value <= 1.0)) {
    throw AccuracyError("metric report: fidelity outside [0, 1]");
  }
}

std::vector<std::string> MetricReport::field_names() {
  return {"metric", "value",  "family", "spec_a", "spec_r", "f_re", "f_im",
          "s",      "t",      "theta",  "phi",    "r_b",    "d",    "op_s",
          "op_t",   "op_d",   "R",      "m",      "grid_L", "grid_M", "fock_cutoff"};
}

std::vector<std::string> MetricReport::field_values() const {
  using kv::format;
  return {std::string(metric_name(metric)),
          format(value),
          std::string(family_name(spec.family)),
          format(spec.a),
          format(spec.r),
          format(spec.f.real()),
          format(spec.f.imag()),
          format(spec.s),
          format(spec.t),
          format(spec.theta),
          format(spec.phi),
          format(spec.r_b),
          format(spec.d),
          format(op.s),
          format(op.t),
          format(op.d),
          format(context.R),
          format(context.m),
          format(grid_half_extent),
          std::to_string(grid_points),
          std::to_string(fock_cutoff)};
}

std::string MetricReport::to_json() const {
  nlohmann::ordered_json j;
  const auto names = field_names();
  const auto values = field_values();
  for (std::size_t k = 0; k < names.size(); ++k) j[names[k]] = values[k];
  j["value"] = value;
  j["spec"] = spec.serialize();
  return j.dump();
}

}  // namespace cvq
