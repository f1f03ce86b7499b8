// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>
#include <vector>

#include "cvq/simd/kernels.hpp"

namespace cvq::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [w0,w1,w2,w3] -> [w0,w0,w1,w1], [w2,w2,w3,w3]
inline void spread_weights(__m256d w, __m256d& w01, __m256d& w23) {
  w01 = _mm256_permute4x64_pd(w, 0b01010000);
  w23 = _mm256_permute4x64_pd(w, 0b11111010);
}

// Planar re/im lanes -> two interleaved complex stores.
inline void store_interleaved(cplx* out, __m256d re, __m256d im) {
  const __m256d lo = _mm256_unpacklo_pd(re, im);
  const __m256d hi = _mm256_unpackhi_pd(re, im);
  auto* p = reinterpret_cast<double*>(out);
  _mm256_storeu_pd(p, _mm256_permute2f128_pd(lo, hi, 0x20));
  _mm256_storeu_pd(p + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
}

cplx weighted_sum_avx2(const double* w, const cplx* v, std::size_t n) {
  const auto* pv = reinterpret_cast<const double*>(v);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d w01, w23;
    spread_weights(_mm256_loadu_pd(w + k), w01, w23);
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(pv + 2 * k), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(pv + 2 * k + 4), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re = lanes[0] + lanes[2], im = lanes[1] + lanes[3];
  for (; k < n; ++k) {
    re += w[k] * v[k].real();
    im += w[k] * v[k].imag();
  }
  return {re, im};
}

cplx weighted_inner_avx2(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d w01, w23;
    spread_weights(_mm256_loadu_pd(w + k), w01, w23);
    for (int half = 0; half < 2; ++half) {
      const __m256d wv = half == 0 ? w01 : w23;
      const __m256d av = _mm256_loadu_pd(pa + 2 * k + 4 * half);
      const __m256d bv = _mm256_loadu_pd(pb + 2 * k + 4 * half);
      const __m256d bswap = _mm256_permute_pd(bv, 0b0101);
      // [ar*br, ai*bi, ...] and [ar*bi, ai*br, ...]
      acc_re = _mm256_fmadd_pd(wv, _mm256_mul_pd(av, bv), acc_re);
      acc_im = _mm256_fmadd_pd(wv, _mm256_mul_pd(av, bswap), acc_im);
    }
  }
  alignas(32) double li[4];
  _mm256_store_pd(li, acc_im);
  double re = hsum(acc_re);
  double im = li[0] - li[1] + li[2] - li[3];
  for (; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += w[k] * (ar * br + ai * bi);
    im += w[k] * (ar * bi - ai * br);
  }
  return {re, im};
}

void hermite_series_avx2(const cplx* coeffs, std::size_t n_terms, const double* x,
                         const double* psi0, cplx* out, std::size_t n_points) {
  const std::size_t vec_end = n_points - n_points % 4;
  if (n_terms == 0) {
    for (std::size_t k = 0; k < n_points; ++k) out[k] = 0.0;
    return;
  }
  std::vector<double> up(n_terms), down(n_terms);
  for (std::size_t n = 1; n < n_terms; ++n) {
    up[n] = std::sqrt(2.0 / static_cast<double>(n + 1));
    down[n] = std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
  }
  const __m256d sqrt2 = _mm256_set1_pd(std::sqrt(2.0));
  for (std::size_t k = 0; k < vec_end; k += 4) {
    const __m256d xv = _mm256_loadu_pd(x + k);
    __m256d prev = _mm256_loadu_pd(psi0 + k);
    __m256d re = _mm256_mul_pd(_mm256_set1_pd(coeffs[0].real()), prev);
    __m256d im = _mm256_mul_pd(_mm256_set1_pd(coeffs[0].imag()), prev);
    if (n_terms > 1) {
      __m256d cur = _mm256_mul_pd(_mm256_mul_pd(sqrt2, xv), prev);
      re = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[1].real()), cur, re);
      im = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[1].imag()), cur, im);
      for (std::size_t n = 1; n + 1 < n_terms; ++n) {
        const __m256d next = _mm256_fmsub_pd(_mm256_mul_pd(_mm256_set1_pd(up[n]), xv), cur,
                                             _mm256_mul_pd(_mm256_set1_pd(down[n]), prev));
        prev = cur;
        cur = next;
        re = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[n + 1].real()), cur, re);
        im = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[n + 1].imag()), cur, im);
      }
    }
    store_interleaved(out + k, re, im);
  }
  if (vec_end < n_points) {
    scalar_kernels().hermite_series(coeffs, n_terms, x + vec_end, psi0 + vec_end, out + vec_end,
                                    n_points - vec_end);
  }
}

void trig_series_avx2(const cplx* modes, std::size_t n_modes, double omega0, double domega,
                      const double* x, cplx* out, std::size_t n_points) {
  const std::size_t vec_end = n_points - n_points % 4;
  alignas(32) double sr[4], si[4], cr0[4], ci0[4];
  for (std::size_t k = 0; k < vec_end; k += 4) {
    for (int l = 0; l < 4; ++l) {
      sr[l] = std::cos(domega * x[k + l]);
      si[l] = std::sin(domega * x[k + l]);
    }
    const __m256d step_re = _mm256_load_pd(sr), step_im = _mm256_load_pd(si);
    __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
    for (std::size_t j0 = 0; j0 < n_modes; j0 += kTrigReseed) {
      const double w0 = omega0 + static_cast<double>(j0) * domega;
      for (int l = 0; l < 4; ++l) {
        cr0[l] = std::cos(w0 * x[k + l]);
        ci0[l] = std::sin(w0 * x[k + l]);
      }
      __m256d cr = _mm256_load_pd(cr0), ci = _mm256_load_pd(ci0);
      const std::size_t j1 = j0 + kTrigReseed < n_modes ? j0 + kTrigReseed : n_modes;
      for (std::size_t j = j0; j < j1; ++j) {
        const __m256d mr = _mm256_set1_pd(modes[j].real());
        const __m256d mi = _mm256_set1_pd(modes[j].imag());
        re = _mm256_fmadd_pd(mr, cr, _mm256_fnmadd_pd(mi, ci, re));
        im = _mm256_fmadd_pd(mr, ci, _mm256_fmadd_pd(mi, cr, im));
        const __m256d nr = _mm256_fmsub_pd(cr, step_re, _mm256_mul_pd(ci, step_im));
        ci = _mm256_fmadd_pd(cr, step_im, _mm256_mul_pd(ci, step_re));
        cr = nr;
      }
    }
    store_interleaved(out + k, re, im);
  }
  if (vec_end < n_points) {
    scalar_kernels().trig_series(modes, n_modes, omega0, domega, x + vec_end, out + vec_end,
                                 n_points - vec_end);
  }
}

}  // namespace

namespace detail {
const Kernels& avx2_table() {
  static const Kernels table{"avx2", &weighted_sum_avx2, &weighted_inner_avx2,
                             &hermite_series_avx2, &trig_series_avx2};
  return table;
}
}  // namespace detail

}  // namespace cvq::simd
