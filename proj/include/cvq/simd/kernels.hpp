#pragma once

// Data-parallel inner loops shared by the numerics layer.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The active table is chosen once at first use from the
// CPU feature bits; CVQ_SIMD=scalar|avx2 in the environment forces a choice.
// Both variants follow the same summation schedule, so they agree to a few
// ulps (FMA contraction is the only difference).

#include <complex>
#include <cstddef>

namespace cvq::simd {

using cplx = std::complex<double>;

struct Kernels {
  const char* name;

  // sum_k w[k] * v[k]
  cplx (*weighted_sum)(const double* w, const cplx* v, std::size_t n);

  // sum_k w[k] * conj(a[k]) * b[k]
  cplx (*weighted_inner)(const double* w, const cplx* a, const cplx* b, std::size_t n);

  // out[k] = sum_{j < n_terms} coeffs[j] * psi_j(x[k]) where psi_j are the
  // normalized Hermite functions and psi0[k] = pi^{-1/4} exp(-x[k]^2 / 2).
  void (*hermite_series)(const cplx* coeffs, std::size_t n_terms, const double* x,
                         const double* psi0, cplx* out, std::size_t n_points);

  // out[k] = sum_{j < n_modes} modes[j] * exp(i (omega0 + j * domega) x[k])
  void (*trig_series)(const cplx* modes, std::size_t n_modes, double omega0, double domega,
                      const double* x, cplx* out, std::size_t n_points);
};

// Modes between phasor re-seeds in trig_series; shared by all variants.
inline constexpr std::size_t kTrigReseed = 64;

const Kernels& scalar_kernels();

// nullptr when the build or the CPU lacks AVX2+FMA.
const Kernels* avx2_kernels();

// The table every numerics routine uses.
const Kernels& active_kernels();

}  // namespace cvq::simd
