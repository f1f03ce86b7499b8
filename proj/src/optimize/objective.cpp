#include "cvq/optimize/objective.hpp"

#include "cvq/error.hpp"
#include "cvq/states/states.hpp"
#include "cvq/util/kv.hpp"

namespace cvq {

Objective Objective::gate_fidelity(double a, double R, double m) {
  Objective o;
  o.kind = ObjectiveKind::GateFidelityMax;
  o.context = {a, R, m};
  return o;
}

Objective Objective::nl_variance(double a) {
  Objective o;
  o.kind = ObjectiveKind::NlVarianceMin;
  o.context.a = a;
  return o;
}

Objective Objective::state_fidelity(StateSpec target) {
  Objective o;
  o.kind = ObjectiveKind::StateFidelityMax;
  o.context.a = target.a;
  o.target = std::move(target);
  return o;
}

MetricId Objective::metric() const noexcept {
  switch (kind) {
    case ObjectiveKind::GateFidelityMax: return MetricId::GateFidelity;
    case ObjectiveKind::NlVarianceMin: return MetricId::NlVariance;
    case ObjectiveKind::StateFidelityMax: return MetricId::StateFidelity;
  }
  return MetricId::StateFidelity;
}

std::string Objective::id() const {
  switch (kind) {
    case ObjectiveKind::GateFidelityMax:
      return "gate_fidelity_max(a=" + kv::format(context.a) + ",R=" + kv::format(context.R) +
             ",m=" + kv::format(context.m) + ")";
    case ObjectiveKind::NlVarianceMin:
      return "nl_variance_min(a=" + kv::format(context.a) + ")";
    case ObjectiveKind::StateFidelityMax:
      return "state_fidelity_max(" + std::string(family_name(target->family)) +
             ",a=" + kv::format(target->a) + ",r=" + kv::format(target->r) + ")";
  }
  return "unknown";
}

void Objective::validate() const {
  if (kind == ObjectiveKind::StateFidelityMax) {
    if (!target) throw ContractError("objective: state fidelity needs a target state");
    target->validate();
  } else if (target) {
    throw ContractError("objective: target state is only used by state fidelity");
  }
  if (kind == ObjectiveKind::GateFidelityMax && context.m != 0.0) {
    throw ContractError("objective: only m = 0 is supported");
  }
  if (context.a < 0.0) throw ContractError("objective: a must be non-negative");
}

BoundObjective::BoundObjective(Objective objective, const QGrid& grid,
                               const NumericsConfig& numerics)
    : obj_(std::move(objective)), grid_(grid) {
  obj_.validate();
  if (obj_.target) target_ = make_state(*obj_.target, grid_, numerics);
}

double BoundObjective::operator()(const PositionWave& wave) const {
  switch (obj_.kind) {
    case ObjectiveKind::GateFidelityMax: return gate_fidelity(wave, obj_.context);
    case ObjectiveKind::NlVarianceMin: return nl_variance(wave, obj_.context.a);
    case ObjectiveKind::StateFidelityMax: return state_fidelity(*target_, wave);
  }
  return 0.0;
}

}  // namespace cvq
