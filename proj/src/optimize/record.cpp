#include "cvq/optimize/record.hpp"

#include <cstdio>
#include <json.hpp>

#include "cvq/util/kv.hpp"

namespace cvq {

std::string config_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string numerics_text(const NumericsConfig& n) {
  return "grid.points = " + std::to_string(n.grid_points) + "\n" +
         "grid.half_extent = " + kv::format(n.half_extent) + "\n" +
         "fock.cutoff = " + std::to_string(n.fock_cutoff) + "\n" +
         "fock.guard = " + std::to_string(n.fock_guard) + "\n";
}

std::string OptimizationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["objective"] = objective;
  j["method"] = method;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < names.size() && k < params.size(); ++k) p[names[k]] = params[k];
  j["params"] = p;
  j["value"] = value;
  j["baseline"] = baseline;
  j["seed"] = seed;
  j["iterations"] = iterations;
  j["evaluations"] = evaluations;
  j["trace"] = trace;
  j["wall_seconds"] = wall_seconds;
  j["config_hash"] = config_hash;
  j["numerics"] = {{"grid_points", numerics.grid_points},
                   {"half_extent", grid_half_extent},
                   {"fock_cutoff", numerics.fock_cutoff},
                   {"fock_guard", numerics.fock_guard}};
  j["state"] = spec.serialize();
  j["op"] = {{"s", op.s}, {"t", op.t}, {"d", op.d}};
  return j.dump();
}

}  // namespace cvq
