#include "cvq/numerics/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvq/error.hpp"

namespace cvq {

FockOperator FockOperator::annihilation(std::size_t cutoff) {
  FockOperator a(cutoff + 1);
  for (std::size_t n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockOperator FockOperator::number(std::size_t cutoff) {
  FockOperator a(cutoff + 1);
  for (std::size_t n = 0; n <= cutoff; ++n) a(n, n) = static_cast<double>(n);
  return a;
}

FockOperator FockOperator::adjoint() const {
  FockOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

FockOperator FockOperator::operator*(const FockOperator& rhs) const {
  if (rhs.dim_ != dim_) throw ContractError("FockOperator: dimension mismatch");
  FockOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx(0.0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

FockOperator FockOperator::operator+(const FockOperator& rhs) const {
  if (rhs.dim_ != dim_) throw ContractError("FockOperator: dimension mismatch");
  FockOperator out(*this);
  for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] += rhs.m_[i];
  return out;
}

FockOperator FockOperator::operator*(cplx scale) const {
  FockOperator out(*this);
  for (cplx& v : out.m_) v *= scale;
  return out;
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.size() != dim_) throw ContractError("FockOperator::apply: dimension mismatch");
  std::vector<cplx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return FockVector(std::move(out));
}

double FockOperator::anti_hermitian_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) + std::conj((*this)(j, i))));
  return worst;
}

double FockOperator::norm1() const noexcept {
  double worst = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += std::abs((*this)(i, j));
    worst = std::max(worst, s);
  }
  return worst;
}

FockOperator trisqueeze_generator(cplx f, std::size_t cutoff) {
  FockOperator g(cutoff + 1);
  const cplx i(0.0, 1.0);
  for (std::size_t n = 3; n <= cutoff; ++n) {
    const auto x = static_cast<double>(n);
    const double amp = std::sqrt(x * (x - 1.0) * (x - 2.0));  // <n-3| a^3 |n>
    g(n - 3, n) = i * f * amp;
    g(n, n - 3) = i * std::conj(f) * amp;
  }
  return g;
}

namespace {

struct SparseRow {
  std::vector<std::size_t> cols;
  std::vector<cplx> vals;
};

}  // namespace

FockVector fock_unitary_exp(const FockOperator& generator, const FockVector& input,
                            const FockExpOptions& options) {
  const std::size_t dim = generator.dim();
  if (input.size() != dim) {
    throw ContractError("fock_unitary_exp: generator and input dimensions differ");
  }
  if (generator.anti_hermitian_defect() > 1e-12) {
    throw ContractError("fock_unitary_exp: generator is not anti-Hermitian");
  }

  std::vector<SparseRow> rows(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (generator(i, j) != cplx(0.0)) {
        rows[i].cols.push_back(j);
        rows[i].vals.push_back(generator(i, j));
      }

  const double gnorm = generator.norm1();
  const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(gnorm)));
  const double dt = 1.0 / static_cast<double>(steps);
  const double in_norm2 = input.norm2();

  std::vector<cplx> v(input.coefficients().begin(), input.coefficients().end());
  std::vector<cplx> term(dim), next(dim);
  for (std::size_t s = 0; s < steps; ++s) {
    term = v;
    for (int k = 1;; ++k) {
      double tnorm = 0.0, vnorm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        cplx acc = 0.0;
        for (std::size_t e = 0; e < rows[i].cols.size(); ++e) acc += rows[i].vals[e] * term[rows[i].cols[e]];
        next[i] = acc * (dt / k);
      }
      term.swap(next);
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] += term[i];
        tnorm += std::norm(term[i]);
        vnorm += std::norm(v[i]);
      }
      if (tnorm <= 1e-34 * vnorm) break;
      if (k > 200) throw AccuracyError("fock_unitary_exp: Taylor series failed to converge");
    }
  }

  FockVector out(std::move(v));
  const double drift = std::abs(out.norm2() - in_norm2);
  const std::size_t guard = options.guard ? options.guard : std::max<std::size_t>(1, dim / 5);
  const std::size_t first_guarded = dim > guard ? dim - guard : 0;
  const double tail = out.tail_mass(first_guarded);
  if (tail > options.leakage_tolerance * std::max(in_norm2, 1e-300)) {
    std::ostringstream msg;
    msg << "cutoff too small: mass " << tail << " in guard band n >= " << first_guarded
        << " (cutoff " << dim - 1 << ")";
    throw CutoffError(msg.str(), tail);
  }
  if (drift > options.norm_tolerance * std::max(in_norm2, 1e-300)) {
    std::ostringstream msg;
    msg << "fock_unitary_exp: norm drift " << drift << " exceeds tolerance";
    throw AccuracyError(msg.str());
  }
  return out;
}

}  // namespace cvq
