#include "cvq/metrics/metrics.hpp"

#include <cmath>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/numerics/quadrature.hpp"
#include "cvq/numerics/spectral.hpp"

namespace cvq {
namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kOvershoot = 1e-9;
constexpr double kImagTolerance = 1e-8;

void require_normalized(const PositionWave& w, const char* context) {
  const double n = w.norm2();
  if (std::abs(n - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << context << ": wave is not normalized (norm^2 = " << n << ")";
    throw ContractError(msg.str());
  }
}

double clamp_fidelity(double f, const char* context) {
  if (f > 1.0 + kOvershoot) {
    std::ostringstream msg;
    msg << context << ": fidelity " << f << " exceeds 1 beyond tolerance";
    throw AccuracyError(msg.str());
  }
  return f > 1.0 ? 1.0 : f;
}

double real_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > kImagTolerance) {
    std::ostringstream msg;
    msg << "nl_variance: " << what << " has imaginary residue " << v.imag();
    throw AccuracyError(msg.str());
  }
  return v.real();
}

}  // namespace

double state_fidelity(const PositionWave& a, const PositionWave& b) {
  if (!(a.grid() == b.grid())) throw ContractError("state_fidelity: grid mismatch");
  require_normalized(a, "state_fidelity");
  require_normalized(b, "state_fidelity");
  return clamp_fidelity(std::norm(inner_product(a, b)), "state_fidelity");
}

double gate_fidelity(const PositionWave& resource, const GateContext& ctx) {
  if (ctx.m != 0.0) throw ContractError("gate_fidelity: only m = 0 is supported");
  if (!std::isfinite(ctx.R) || !std::isfinite(ctx.a)) {
    throw ContractError("gate_fidelity: a and R must be finite");
  }
  resource.require_tail_decay("gate_fidelity");
  const QGrid& grid = resource.grid();
  const auto q = grid.points();
  const double k = std::exp(-2.0 * ctx.R);
  std::vector<cplx> out(q.size()), ideal(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double w = std::exp(-0.5 * q[i] * q[i] * k);
    const double ph = ctx.a * q[i] * q[i] * q[i];
    out[i] = w * resource[i];
    ideal[i] = w * cplx(std::cos(ph), std::sin(ph));
  }
  const PositionWave psi_out = PositionWave(grid, std::move(out));
  const PositionWave psi_ideal = PositionWave(grid, std::move(ideal));
  const double n_out = psi_out.norm2();
  const double n_ideal = psi_ideal.norm2();
  if (!(n_out > 0.0)) throw AccuracyError("gate_fidelity: reweighted resource has zero norm");
  const double f = std::norm(inner_product(psi_out, psi_ideal)) / (n_out * n_ideal);
  return clamp_fidelity(f, "gate_fidelity");
}

QuadratureMoments quadrature_moments(const PositionWave& wave) {
  require_normalized(wave, "nl_variance");
  wave.require_tail_decay("nl_variance");
  const QGrid& grid = wave.grid();
  const auto q = grid.points();
  const std::size_t m = q.size();

  const SpectralPair d = spectral_derivatives(wave);
  std::vector<cplx> q2phi(m);
  std::vector<double> dens(m);
  for (std::size_t k = 0; k < m; ++k) {
    q2phi[k] = q[k] * q[k] * wave[k];
    dens[k] = std::norm(wave[k]);
  }
  const PositionWave q2w(grid, std::move(q2phi));
  const PositionWave dq2w = spectral_derivative(q2w, 1);

  const cplx i1{0.0, 1.0};
  // E(p) = <phi| -i d |phi>, E(p^2) = -<phi|d^2 phi>
  const cplx ep = -i1 * inner_product(wave, d.first);
  const cplx ep2 = -inner_product(wave, d.second);
  const cplx epq2 = -i1 * inner_product(wave, dq2w);
  const cplx eq2p = -i1 * inner_product(q2w, d.first);

  std::vector<double> m2(m), m4(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double q2 = q[k] * q[k];
    m2[k] = q2 * dens[k];
    m4[k] = q2 * q2 * dens[k];
  }
  QuadratureMoments out;
  out.p = real_checked(ep, "E(p)");
  out.p2 = real_checked(ep2, "E(p^2)");
  out.pq2_sym = real_checked(epq2 + eq2p, "E(p q^2) + E(q^2 p)");
  out.q2 = integrate(m2, grid);
  out.q4 = integrate(m4, grid);
  return out;
}

double nl_variance(const PositionWave& resource, double a) {
  const QuadratureMoments e = quadrature_moments(resource);
  const double var = e.p2 - 3.0 * a * e.pq2_sym + 9.0 * a * a * e.q4 - e.p * e.p -
                     9.0 * a * a * e.q2 * e.q2 + 6.0 * a * e.p * e.q2;
  if (!(var > 0.0)) {
    std::ostringstream msg;
    msg << "nl_variance: non-positive variance " << var;
    throw AccuracyError(msg.str());
  }
  return var;
}

}  // namespace cvq
