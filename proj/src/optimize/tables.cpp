#include "cvq/optimize/tables.hpp"

#include "cvq/error.hpp"
#include "cvq/optimize/genetic.hpp"

namespace cvq {

std::string_view table_name(TableId id) {
  return id == TableId::Msbqc ? "table_msbqc" : "table_mbqc";
}

TableId parse_table(std::string_view name) {
  if (name == "table_msbqc") return TableId::Msbqc;
  if (name == "table_mbqc") return TableId::Mbqc;
  throw ConfigError("unknown table '" + std::string(name) + "'");
}

const std::vector<TableRow>& table_rows(TableId id) {
  static const std::vector<TableRow> msbqc{
      {0, 0.2924, -0.672, {}, {}, 0.871},
      {1, 0.871, -0.246, {0.904}, {4.712}, 0.938},
      {2, 1.369, -0.063, {1.411, 0.7131}, {4.712, 3.14}, 0.961},
      {3, 1.278, -0.054, {1.328, 0.588, 0.192}, {4.712, 3.14, 4.712}, 0.961},
      {4, 1.0835, -0.31, {1.196, 0.5115, 1.57, 1.555}, {4.712, 3.14, 4.712, 0.0}, 0.979},
      {5, 1.4655, -0.1737, {1.549, 0.8929, 0.5605, 1.283, 1.299},
       {4.712, 3.14, 4.712, 0.0, 4.712}, 0.987},
  };
  static const std::vector<TableRow> mbqc{
      {0, 0.0, -0.1025, {}, {}, 0.611},
      {1, 0.0, 0.02, {0.6602}, {4.712}, 0.438},
      {2, 0.0, 0.1015, {1.12, 0.5197}, {4.712, 3.14}, 0.361},
      {3, 0.0, 0.1625, {1.403, 0.9658, 0.4502}, {4.712, 3.14, 1.57}, 0.316},
      {4, 0.0, -0.0407, {0.9835, 0.3156, 0.5511, 1.57}, {4.712, 3.14, 1.57, 0.0}, 0.308},
      {5, 0.0, 0.037, {1.323, 0.7534, 0.2648, 0.8175, 1.25}, {4.712, 3.14, 1.57, 0.0, 4.713},
       0.265},
  };
  return id == TableId::Msbqc ? msbqc : mbqc;
}

Objective table_objective(TableId id) {
  return id == TableId::Msbqc ? Objective::gate_fidelity(kTableA) : Objective::nl_variance(kTableA);
}

double table_tolerance(TableId id) { return id == TableId::Msbqc ? 0.01 : 0.005; }

StateSpec row_spec(const TableRow& row) {
  if (row.theta.size() != row.n || row.phi.size() != row.n) {
    throw ContractError("table row: angle count does not match N");
  }
  return StateSpec::bloch(row.theta, row.phi, row.r_b, row.d);
}

double evaluate_table_row(const TableRow& row, const Objective& objective,
                          const NumericsConfig& numerics) {
  const StateSpec spec = row_spec(row);
  return evaluate_bloch(spec, objective, bloch_grid(row.n, BlochBounds{}, numerics), numerics);
}

}  // namespace cvq
