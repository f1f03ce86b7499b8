#pragma once

#include <optional>
#include <string>

#include "cvq/metrics/metrics.hpp"
#include "cvq/metrics/report.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

enum class ObjectiveKind { GateFidelityMax, NlVarianceMin, StateFidelityMax };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::GateFidelityMax;
  GateContext context;
  // StateFidelityMax only
  std::optional<StateSpec> target;

  static Objective gate_fidelity(double a, double R = 0.5, double m = 0.0);
  static Objective nl_variance(double a);
  static Objective state_fidelity(StateSpec target);

  bool maximize() const noexcept { return kind != ObjectiveKind::NlVarianceMin; }
  MetricId metric() const noexcept;
  std::string id() const;
  void validate() const;

  // Minimization form used by every optimizer.
  double loss(double value) const noexcept { return maximize() ? -value : value; }
  double value_from_loss(double loss) const noexcept { return maximize() ? -loss : loss; }
  // a <= b in the objective's own direction
  bool no_worse(double a, double b, double tol = 0.0) const noexcept {
    return maximize() ? a >= b - tol : a <= b + tol;
  }
};

// An objective bound to one grid; the target wave (if any) is built once.
class BoundObjective {
 public:
  BoundObjective(Objective objective, const QGrid& grid, const NumericsConfig& numerics);
  double operator()(const PositionWave& wave) const;
  const Objective& objective() const noexcept { return obj_; }
  const QGrid& grid() const noexcept { return grid_; }

 private:
  Objective obj_;
  QGrid grid_;
  std::optional<PositionWave> target_;
};

}  // namespace cvq
