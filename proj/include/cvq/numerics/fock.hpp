#pragma once

#include <cstddef>
#include <vector>

#include "cvq/numerics/grid.hpp"

namespace cvq {

// Dense operator on the truncated Fock space {|0>, ..., |N_cut>}, row-major.
class FockOperator {
 public:
  explicit FockOperator(std::size_t dim) : dim_(dim), m_(dim * dim) {}

  static FockOperator annihilation(std::size_t cutoff);
  static FockOperator number(std::size_t cutoff);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t cutoff() const noexcept { return dim_ - 1; }
  cplx operator()(std::size_t row, std::size_t col) const noexcept { return m_[row * dim_ + col]; }
  cplx& operator()(std::size_t row, std::size_t col) noexcept { return m_[row * dim_ + col]; }

  FockOperator adjoint() const;
  FockOperator operator*(const FockOperator& rhs) const;
  FockOperator operator+(const FockOperator& rhs) const;
  FockOperator operator*(cplx scale) const;
  FockVector apply(const FockVector& v) const;

  // max_{ij} |A_ij + conj(A_ji)|
  double anti_hermitian_defect() const noexcept;
  // max column absolute sum
  double norm1() const noexcept;

 private:
  std::size_t dim_;
  std::vector<cplx> m_;
};

// i f a^3 + i conj(f) a^dag^3, the three-photon down-conversion generator.
FockOperator trisqueeze_generator(cplx f, std::size_t cutoff);

struct FockExpOptions {
  // Guard band width; 0 selects cutoff / 5.
  std::size_t guard = 0;
  double leakage_tolerance = 1e-8;
  double norm_tolerance = 1e-8;
};

// exp(generator) * input for an anti-Hermitian generator. The exponential is
// taken by Taylor series over sub-steps of unit 1-norm (the vector analogue
// of scaling and squaring). The norm drift and the mass inside the top guard
// band are monitored; leakage above tolerance raises CutoffError.
FockVector fock_unitary_exp(const FockOperator& generator, const FockVector& input,
                            const FockExpOptions& options = {});

}  // namespace cvq
