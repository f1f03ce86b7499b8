#include "cvq/numerics/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/numerics/fft.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq {
namespace {

constexpr double kModeDropTolerance = 1e-17;
constexpr double kBandwidthTolerance = 1e-9;

double wavenumber(std::size_t j, std::size_t m, double step) {
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(m) * step);
  const auto sj = static_cast<double>(j);
  return j <= m / 2 ? base * sj : base * (sj - static_cast<double>(m));
}

}  // namespace

SpectralPair spectral_derivatives(const PositionWave& wave) {
  wave.require_tail_decay("spectral_derivative");
  const std::size_t m = wave.size();
  const double h = wave.grid().step();
  std::vector<cplx> spec(wave.amplitudes().begin(), wave.amplitudes().end());
  fft::forward(spec);
  std::vector<cplx> d1(m), d2(m);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double k = wavenumber(j, m, h);
    const bool nyquist = (m % 2 == 0) && j == m / 2;
    d1[j] = nyquist ? cplx(0.0) : spec[j] * cplx(0.0, k) * inv_m;
    d2[j] = spec[j] * (-k * k) * inv_m;
  }
  fft::inverse(d1);
  fft::inverse(d2);
  return {PositionWave(wave.grid(), std::move(d1)), PositionWave(wave.grid(), std::move(d2))};
}

PositionWave spectral_derivative(const PositionWave& wave, int order) {
  if (order != 1 && order != 2) throw ContractError("spectral_derivative: order must be 1 or 2");
  auto both = spectral_derivatives(wave);
  return order == 1 ? std::move(both.first) : std::move(both.second);
}

std::vector<cplx> bandlimited_eval(const PositionWave& wave, std::span<const double> at,
                                   double max_wavenumber) {
  const std::size_t m = wave.size();
  const double h = wave.grid().step();
  const double q0 = wave.grid().point(0);
  const double half = wave.grid().half_extent();

  std::vector<cplx> spec(wave.amplitudes().begin(), wave.amplitudes().end());
  fft::forward(spec);

  // Symmetric mode ordering j = -m/2 .. m/2 with the Nyquist mode split.
  const std::ptrdiff_t jmin = -static_cast<std::ptrdiff_t>(m / 2);
  const std::ptrdiff_t jmax = static_cast<std::ptrdiff_t>(m / 2);
  std::vector<cplx> modes(static_cast<std::size_t>(jmax - jmin + 1));
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::ptrdiff_t j = jmin; j <= jmax; ++j) {
    const std::size_t src = static_cast<std::size_t>((j + static_cast<std::ptrdiff_t>(m)) %
                                                     static_cast<std::ptrdiff_t>(m));
    cplx v = spec[src] * inv_m;
    if (m % 2 == 0 && (j == jmin || j == jmax)) v *= 0.5;
    if (m % 2 == 1 && j == jmin) v = 0.0;  // odd m has no Nyquist pair
    modes[static_cast<std::size_t>(j - jmin)] = v;
  }

  double peak = 0.0;
  for (const cplx& v : modes) peak = std::max(peak, std::abs(v));
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(m) * h);

  if (max_wavenumber > 0.0) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
      const double k = base * static_cast<double>(static_cast<std::ptrdiff_t>(i) + jmin);
      if (std::abs(k) > max_wavenumber && std::abs(modes[i]) > kBandwidthTolerance * peak) {
        std::ostringstream msg;
        msg << "band-limited resampling: spectrum extends past wavenumber " << max_wavenumber
            << " (grid step " << h << " too coarse for this squeeze)";
        throw GridError(msg.str(), half);
      }
    }
  }

  std::size_t lo = 0, hi = modes.size();
  while (lo < hi && std::abs(modes[lo]) <= kModeDropTolerance * peak) ++lo;
  while (hi > lo && std::abs(modes[hi - 1]) <= kModeDropTolerance * peak) --hi;

  std::vector<double> shifted;
  std::vector<std::size_t> inside;
  shifted.reserve(at.size());
  inside.reserve(at.size());
  for (std::size_t k = 0; k < at.size(); ++k) {
    if (std::abs(at[k]) <= half) {
      shifted.push_back(at[k] - q0);
      inside.push_back(k);
    }
  }
  std::vector<cplx> vals(shifted.size());
  if (hi > lo && !shifted.empty()) {
    const double omega0 = base * static_cast<double>(static_cast<std::ptrdiff_t>(lo) + jmin);
    simd::active_kernels().trig_series(modes.data() + lo, hi - lo, omega0, base, shifted.data(),
                                       vals.data(), shifted.size());
  }
  std::vector<cplx> out(at.size(), cplx(0.0));
  for (std::size_t i = 0; i < inside.size(); ++i) out[inside[i]] = vals[i];
  return out;
}

}  // namespace cvq
