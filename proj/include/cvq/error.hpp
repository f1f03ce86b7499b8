#pragma once

#include <stdexcept>
#include <string>

namespace cvq {

// All library failures derive from Error so callers can annotate a sweep row
// and keep going.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a precondition (length mismatch, malformed spec, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Position grid cannot hold the wavefunction (tails do not decay, bandwidth
// exceeded after a squeeze).
class GridError : public Error {
 public:
  GridError(const std::string& what, double required_half_extent)
      : Error(what), required_half_extent_(required_half_extent) {}
  double required_half_extent() const noexcept { return required_half_extent_; }

 private:
  double required_half_extent_;
};

// Fock truncation leaked probability into the guard band.
class CutoffError : public Error {
 public:
  CutoffError(const std::string& what, double tail_mass)
      : Error(what), tail_mass_(tail_mass) {}
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double tail_mass_;
};

// A quantity that must be real or normalized came out with a residue above
// tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cvq
