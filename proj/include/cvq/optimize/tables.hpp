#pragma once

#include <string_view>
#include <vector>

#include "cvq/numerics/settings.hpp"
#include "cvq/optimize/objective.hpp"
#include "cvq/states/state_spec.hpp"

namespace cvq {

enum class TableId { Msbqc, Mbqc };

std::string_view table_name(TableId id);
TableId parse_table(std::string_view name);

// One printed row: cutoff N, displacement q, squeeze r, Bloch angles and the
// reported metric value.
struct TableRow {
  std::size_t n;
  double d;
  double r_b;
  std::vector<double> theta;
  std::vector<double> phi;
  double value;
};

// a = 0.173 for both tables
inline constexpr double kTableA = 0.173;

const std::vector<TableRow>& table_rows(TableId id);
Objective table_objective(TableId id);
// +-0.01 for fidelities, +-0.005 for variances
double table_tolerance(TableId id);

StateSpec row_spec(const TableRow& row);

// Builds the row's state and evaluates the objective; no optimization.
double evaluate_table_row(const TableRow& row, const Objective& objective,
                          const NumericsConfig& numerics = {});

}  // namespace cvq
