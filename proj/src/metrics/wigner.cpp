#include "cvq/metrics/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvq/error.hpp"
#include "cvq/numerics/quadrature.hpp"
#include "cvq/numerics/spectral.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq {
namespace {

double axis_integral(const std::vector<double>& axis, const std::vector<double>& f) {
  if (axis.size() < 2) return 0.0;
  const auto w = simpson_weights(axis.size(), axis[1] - axis[0]);
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) s += w[k] * f[k];
  return s;
}

}  // namespace

std::vector<double> uniform_axis(double lo, double hi, std::size_t count) {
  if (count < 2) throw ContractError("uniform_axis: need at least two points");
  std::vector<double> v(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) v[k] = lo + h * static_cast<double>(k);
  return v;
}

double WignerGrid::min() const { return *std::min_element(values.begin(), values.end()); }

std::vector<double> WignerGrid::q_marginal() const {
  std::vector<double> out(q_axis.size());
  std::vector<double> row(p_axis.size());
  for (std::size_t i = 0; i < q_axis.size(); ++i) {
    for (std::size_t j = 0; j < p_axis.size(); ++j) row[j] = at(i, j);
    out[i] = axis_integral(p_axis, row);
  }
  return out;
}

double WignerGrid::integral() const { return axis_integral(q_axis, q_marginal()); }

WignerGrid wigner(const PositionWave& wave, const std::vector<double>& q_points,
                  const std::vector<double>& p_points, const WignerOptions& opt) {
  if (q_points.size() < 2 || p_points.empty()) throw ContractError("wigner: empty axes");
  wave.require_tail_decay("wigner");
  const std::size_t nq = q_points.size();
  const double dq = (q_points.back() - q_points.front()) / static_cast<double>(nq - 1);
  for (std::size_t i = 0; i < nq; ++i) {
    if (std::abs(q_points[i] - (q_points.front() + dq * static_cast<double>(i))) > 1e-9 * std::abs(dq) * nq) {
      throw ContractError("wigner: q axis must be uniform");
    }
  }

  const double target = opt.y_step > 0.0 ? opt.y_step : std::min(4.0 * wave.grid().step(), 0.02);
  const std::size_t sub = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(dq) / target)));
  const double h = dq / static_cast<double>(sub);
  const double L = wave.grid().half_extent();
  // y beyond 2L leaves both q+y and q-y off the grid
  const auto half = static_cast<std::size_t>(std::ceil(2.0 * L / std::abs(h)));

  // lattice x_k = q_0 + (k - half) h, k = 0 .. (nq-1) sub + 2 half
  const std::size_t nx = (nq - 1) * sub + 2 * half + 1;
  std::vector<double> x(nx);
  for (std::size_t k = 0; k < nx; ++k) {
    x[k] = q_points.front() + (static_cast<double>(k) - static_cast<double>(half)) * h;
  }
  const std::vector<cplx> phi = bandlimited_eval(wave, x);

  const auto& kern = simd::active_kernels();
  const std::size_t nmodes = 2 * half + 1;
  const std::size_t np = p_points.size();
  WignerGrid out;
  out.q_axis = q_points;
  out.p_axis = p_points;
  out.values.resize(nq * np);
  std::vector<cplx> g(nmodes), row(np);
  const double scale = std::abs(h) / std::numbers::pi;
  for (std::size_t i = 0; i < nq; ++i) {
    const std::size_t c = i * sub + half;
    // y_j = (j - half) h; q+y -> c + j - half, q-y -> c - j + half
    for (std::size_t j = 0; j < nmodes; ++j) {
      g[j] = std::conj(phi[c + j - half]) * phi[c + half - j];
    }
    kern.trig_series(g.data(), nmodes, -2.0 * static_cast<double>(half) * h, 2.0 * h,
                     p_points.data(), row.data(), np);
    for (std::size_t j = 0; j < np; ++j) {
      out.values[i * np + j] = scale * row[j].real();
      out.imag_residue = std::max(out.imag_residue, scale * std::abs(row[j].imag()));
    }
  }
  if (out.imag_residue > 1e-10) {
    throw AccuracyError("wigner: imaginary residue above 1e-10");
  }
  return out;
}

}  // namespace cvq
