#include "cvq/simd/kernels.hpp"

#include <cmath>
#include <vector>

namespace cvq::simd {
namespace {

cplx weighted_sum_scalar(const double* w, const cplx* v, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += w[k] * v[k].real();
    im += w[k] * v[k].imag();
  }
  return {re, im};
}

cplx weighted_inner_scalar(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += w[k] * (ar * br + ai * bi);
    im += w[k] * (ar * bi - ai * br);
  }
  return {re, im};
}

void hermite_series_scalar(const cplx* coeffs, std::size_t n_terms, const double* x,
                           const double* psi0, cplx* out, std::size_t n_points) {
  if (n_terms == 0) {
    for (std::size_t k = 0; k < n_points; ++k) out[k] = 0.0;
    return;
  }
  std::vector<double> up(n_terms), down(n_terms);
  for (std::size_t n = 1; n < n_terms; ++n) {
    up[n] = std::sqrt(2.0 / static_cast<double>(n + 1));
    down[n] = std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
  }
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < n_points; ++k) {
    double prev = psi0[k];
    double re = coeffs[0].real() * prev;
    double im = coeffs[0].imag() * prev;
    if (n_terms > 1) {
      double cur = sqrt2 * x[k] * prev;
      re += coeffs[1].real() * cur;
      im += coeffs[1].imag() * cur;
      for (std::size_t n = 1; n + 1 < n_terms; ++n) {
        const double next = up[n] * x[k] * cur - down[n] * prev;
        prev = cur;
        cur = next;
        re += coeffs[n + 1].real() * cur;
        im += coeffs[n + 1].imag() * cur;
      }
    }
    out[k] = {re, im};
  }
}

void trig_series_scalar(const cplx* modes, std::size_t n_modes, double omega0, double domega,
                        const double* x, cplx* out, std::size_t n_points) {
  for (std::size_t k = 0; k < n_points; ++k) {
    const double xk = x[k];
    const double step_re = std::cos(domega * xk), step_im = std::sin(domega * xk);
    double re = 0.0, im = 0.0;
    for (std::size_t j0 = 0; j0 < n_modes; j0 += kTrigReseed) {
      const double arg = (omega0 + static_cast<double>(j0) * domega) * xk;
      double cr = std::cos(arg), ci = std::sin(arg);
      const std::size_t j1 = j0 + kTrigReseed < n_modes ? j0 + kTrigReseed : n_modes;
      for (std::size_t j = j0; j < j1; ++j) {
        const double mr = modes[j].real(), mi = modes[j].imag();
        re += mr * cr - mi * ci;
        im += mr * ci + mi * cr;
        const double nr = cr * step_re - ci * step_im;
        ci = cr * step_im + ci * step_re;
        cr = nr;
      }
    }
    out[k] = {re, im};
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{"scalar", &weighted_sum_scalar, &weighted_inner_scalar,
                             &hermite_series_scalar, &trig_series_scalar};
  return table;
}

}  // namespace cvq::simd
