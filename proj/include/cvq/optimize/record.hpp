#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvq/numerics/settings.hpp"
#include "cvq/states/gaussian_op.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

struct OptimizationRecord {
  std::string objective;
  std::string method;
  std::vector<std::string> names;
  std::vector<double> params;
  double value = 0.0;
  // value of the identity / starting parameters
  double baseline = 0.0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  // best objective value per iteration or generation
  std::vector<double> trace;
  double wall_seconds = 0.0;
  std::string config_hash;
  NumericsConfig numerics;
  double grid_half_extent = 0.0;

  // The state the parameters describe.
  StateSpec spec;
  GaussianOp op;

  std::string to_json() const;
};

// FNV-1a over the text, as 16 hex digits.
std::string config_hash(std::string_view text);

std::string numerics_text(const NumericsConfig& n);

}  // namespace cvq
