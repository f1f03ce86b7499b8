#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "cvq/error.hpp"
#include "cvq/metrics/metrics.hpp"
#include "cvq/metrics/report.hpp"
#include "cvq/metrics/wigner.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/numerics/spectral.hpp"
#include "cvq/optimize/tables.hpp"
#include "cvq/states/states.hpp"

using namespace cvq;

namespace {

// Gate fidelity of the exact cubic phase resource under the input-weighted
// overlap: Gaussian envelopes e^{-A q^2/2} and e^{-B q^2/2}.
double exact_resource_gate_fidelity(double r, double R) {
  const double B = std::exp(-2.0 * R);
  const double A = B + std::exp(-2.0 * r);
  return 2.0 * std::sqrt(A * B) / (A + B);
}

}  // namespace

TEST_CASE("state fidelity properties") {
  const QGrid g = default_grid(0.5);
  const PositionWave c = make_cubic_phase(0.173, 0.5, g);
  const PositionWave o = make_operator_truncation(0.173, 0.5, g);
  CHECK(state_fidelity(c, c) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(state_fidelity(c, o) - state_fidelity(o, c)) < 1e-12);
  PositionWave rotated = o;
  for (auto& v : rotated.amplitudes()) v *= std::polar(1.0, 1.234);
  CHECK(std::abs(state_fidelity(c, rotated) - state_fidelity(c, o)) < 1e-12);
  CHECK(state_fidelity(make_cubic_phase(0.0, 0.5, g), make_gaussian_squeezed(0.5, g)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(state_fidelity(c, make_cubic_phase(0.173, 0.5, default_grid(0.0))), ContractError);
  PositionWave scaled = c;
  for (auto& v : scaled.amplitudes()) v *= 1.01;
  CHECK_THROWS_AS(state_fidelity(c, scaled), ContractError);
}

TEST_CASE("gate fidelity of the exact resource follows the Gaussian envelope formula") {
  for (double r : {0.0, 0.5, 1.2}) {
    const QGrid g = default_grid(r);
    const double f = gate_fidelity(make_cubic_phase(0.173, r, g), {0.173, 0.5, 0.0});
    CHECK(std::abs(f - exact_resource_gate_fidelity(r, 0.5)) < 1e-10);
  }
  // a broad envelope e^{-q^2 / 50} approaches the ideal output
  const QGrid g(40.0, 16384);
  std::vector<cplx> flat(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double q = g.point(k);
    flat[k] = std::polar(std::exp(-q * q / 50.0), 0.173 * q * q * q);
  }
  const PositionWave wide = PositionWave(g, flat).normalized();
  const double B = std::exp(-1.0);
  const double A = B + 0.04;
  CHECK(std::abs(gate_fidelity(wide, {0.173, 0.5, 0.0}) - 2.0 * std::sqrt(A * B) / (A + B)) < 1e-9);
}

TEST_CASE("gate fidelity reproduces the N = 0 optimized Gaussian") {
  const TableRow& row = table_rows(TableId::Msbqc).front();
  const double f = evaluate_table_row(row, Objective::gate_fidelity(0.173));
  CHECK(std::abs(f - 0.871) <= 0.01);
  CHECK_THROWS_AS(gate_fidelity(make_gaussian_squeezed(0.0, default_grid(0.0)), {0.173, 0.5, 1.0}), ContractError);
}

TEST_CASE("nonlinear variance") {
  const QGrid g0 = default_grid(0.0);
  CHECK(nl_variance(make_gaussian_squeezed(0.0, g0), 0.0) == doctest::Approx(0.5).epsilon(1e-8));
  const double a = 0.173;
  const double vg = nl_variance(make_gaussian_squeezed(0.0, g0), a);
  CHECK(std::abs(vg - (0.5 + 4.5 * a * a)) < 1e-8);
  CHECK(std::abs(nl_variance(make_operator_truncation(a, 0.0, g0), a) - 0.56) <= 0.005);

  for (double av : {0.02, 0.173}) {
    for (double r : {0.0, 0.4, 0.8, 1.2}) {
      const QGrid g = default_grid(r);
      CHECK(std::abs(nl_variance(make_cubic_phase(av, r, g), av) - 0.5 * std::exp(-2.0 * r)) < 1e-6);
    }
  }
}

TEST_CASE("momentum kicks leave the nonlinear variance unchanged") {
  const QGrid g = default_grid(1.0);
  for (const StateSpec& s : {StateSpec::fock_truncation(0.173, 0.3), StateSpec::operator_truncation(0.173, 0.2),
                             StateSpec::bloch({0.66}, {4.712}, 0.02, 0.0)}) {
    const double base = nl_variance(make_state(s, g), 0.173);
    const double kicked = nl_variance(make_state(s, g, {}, GaussianOp{1.7, 0.0, 0.0}), 0.173);
    CHECK(std::abs(base - kicked) < 1e-8);
  }
}

TEST_CASE("quadrature moments of the vacuum") {
  const QuadratureMoments m = quadrature_moments(make_gaussian_squeezed(0.0, default_grid(0.0)));
  CHECK(std::abs(m.p) < 1e-12);
  CHECK(m.p2 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(m.q2 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(m.q4 == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(std::abs(m.pq2_sym) < 1e-12);
}

TEST_CASE("wigner function of the vacuum") {
  const QGrid g = default_grid(0.0);
  const auto axis = uniform_axis(-6.0, 6.0, 201);
  const WignerGrid w = wigner(make_gaussian_squeezed(0.0, g), axis, axis);
  CHECK(std::abs(w.at(100, 100) - 1.0 / std::numbers::pi) < 1e-6);
  CHECK(w.min() >= -1e-10);
  CHECK(std::abs(w.integral() - 1.0) < 1e-4);
  CHECK(w.imag_residue < 1e-10);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double q = axis[i];
    CHECK(std::abs(w.at(i, 37) - std::exp(-q * q - axis[37] * axis[37]) / std::numbers::pi) < 1e-9);
  }
}

TEST_CASE("wigner marginal and negativity") {
  const QGrid g = default_grid(0.3);
  const PositionWave phi1 = make_fock_truncation(0.173, 0.3, g);
  const auto qa = uniform_axis(-6.0, 6.0, 121);
  const auto pa = uniform_axis(-12.0, 12.0, 241);
  const WignerGrid w = wigner(phi1, qa, pa);
  const auto marg = w.q_marginal();
  const auto at = bandlimited_eval(phi1, qa);
  for (std::size_t i = 0; i < qa.size(); ++i) {
    if (std::abs(qa[i]) > 3.0) continue;
    CHECK(std::abs(marg[i] - std::norm(at[i])) < 1e-6);
  }
  CHECK(w.min() < 0.0);
  const auto axis = uniform_axis(-6.0, 6.0, 201);
  CHECK(wigner(make_cubic_phase(0.173, 0.3, g), axis, axis).min() < 0.0);
}

TEST_CASE("metric report fields") {
  MetricReport r;
  r.metric = MetricId::GateFidelity;
  r.value = 0.9;
  r.spec = StateSpec::trisqueezed(0.05, 0.3, -0.1);
  CHECK(MetricReport::field_names().size() == r.field_values().size());
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["metric"] == "gate_fidelity");
  CHECK(j["value"].get<double>() == 0.9);
  CHECK(parse_metric("nl_variance") == MetricId::NlVariance);
  r.value = 1.5;
  CHECK_THROWS_AS(r.check(), AccuracyError);
}
