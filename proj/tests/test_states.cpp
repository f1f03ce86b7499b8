#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cvq/error.hpp"
#include "cvq/metrics/metrics.hpp"
#include "cvq/numerics/hermite.hpp"
#include "cvq/numerics/quadrature.hpp"
#include "cvq/states/profile.hpp"
#include "cvq/states/states.hpp"

using namespace cvq;

namespace {

double var_q(const PositionWave& w) {
  std::vector<double> m1(w.size()), m2(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double q = w.grid().point(k);
    m1[k] = q * std::norm(w[k]);
    m2[k] = q * q * std::norm(w[k]);
  }
  const double e1 = integrate(m1, w.grid());
  return integrate(m2, w.grid()) - e1 * e1;
}

double max_abs_diff(const PositionWave& a, const PositionWave& b) {
  double e = 0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, std::abs(a[k] - b[k]));
  return e;
}

}  // namespace

TEST_CASE("gaussian squeezed state") {
  const QGrid g0 = default_grid(0.0);
  CHECK(var_q(make_gaussian_squeezed(0.0, g0)) == doctest::Approx(0.5).epsilon(1e-8));
  const QGrid g = default_grid(0.5);
  const PositionWave s5 = make_gaussian_squeezed(0.5, g);
  CHECK(std::abs(var_q(s5) - std::exp(1.0) / 2.0) < 1e-6);
  CHECK(s5.norm2() == doctest::Approx(1.0).epsilon(1e-10));
  // |<r1|r2>|^2 = sech(r1 - r2) for real squeezes
  const double f = state_fidelity(s5, make_gaussian_squeezed(0.3, g));
  CHECK(std::abs(f - 1.0 / std::cosh(0.2)) < 1e-8);
  CHECK_THROWS_AS(make_gaussian_squeezed(2.0, QGrid(6.0, 2048)), GridError);
}

TEST_CASE("cubic phase state") {
  const QGrid g = default_grid(0.7);
  const PositionWave c0 = make_cubic_phase(0.0, 0.7, g);
  CHECK(max_abs_diff(c0, make_gaussian_squeezed(0.7, g)) < 1e-15);
  const PositionWave c = make_cubic_phase(0.173, 0.7, g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(std::abs(c[k]) - std::abs(c0[k])) < 1e-12);

  // adaptive quadrature oracle: F(phi_c(0.02, 0.3), phi_G(0.3))
  const QGrid g3 = default_grid(0.3);
  const double f = state_fidelity(make_cubic_phase(0.02, 0.3, g3), make_gaussian_squeezed(0.3, g3));
  CHECK(std::abs(f - 0.99554447065385921) < 1e-8);
  CHECK(f >= 0.95);
}

TEST_CASE("fock truncation state") {
  const QGrid g = default_grid(0.3);
  const FockVector vac = fock_truncation_coefficients(0.0, 0.0, g);
  CHECK(std::abs(vac[0] - 1.0) < 1e-12);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(std::abs(vac[n]) < 1e-12);

  const FockVector c = fock_truncation_coefficients(0.173, 0.3, g);
  const cplx raw[4] = {{0.9348819856507131, 0.0},
                       {0.0, 0.22496914420057599},
                       {0.010296659011546467, 0.0},
                       {0.0, 0.16861227626408594}};
  double n2 = 0;
  for (const auto& v : raw) n2 += std::norm(v);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(c[n] - raw[n] / std::sqrt(n2)) < 1e-8);

  const PositionWave phi1 = make_fock_truncation(0.173, 0.3, g);
  const FockVector back = position_to_fock(phi1, 20);
  for (std::size_t n = 4; n <= 20; ++n) CHECK(std::abs(back[n]) < 1e-8);
  // oracle: F(phi_1, phi_c) at a = 0.173, r = 0.3
  CHECK(std::abs(state_fidelity(phi1, make_cubic_phase(0.173, 0.3, g)) - 0.95315156383031618) < 1e-8);
}

TEST_CASE("operator truncation state") {
  const QGrid g = default_grid(0.5);
  const double a = 0.173, r = 0.5;
  const PositionWave raw = StateProfile::from_spec(StateSpec::operator_truncation(a, r), g).sample_raw(g);
  // sample_raw carries the (e^r sqrt(pi))^{-1/2} prefactor
  const double norm_unscaled = raw.norm2() * std::exp(r) * std::sqrt(std::numbers::pi);
  const double expect = std::exp(0.5) * std::sqrt(std::numbers::pi) * (1.0 + 15.0 / 8.0 * a * a * std::exp(3.0));
  CHECK(std::abs(norm_unscaled - expect) < 1e-8 * expect);
  CHECK(operator_truncation_norm2(a, r) == doctest::Approx(expect).epsilon(1e-15));

  CHECK(max_abs_diff(make_operator_truncation(0.0, 0.5, g), make_gaussian_squeezed(0.5, g)) < 1e-14);

  const QGrid g0 = default_grid(0.0);
  const FockVector c = position_to_fock(make_operator_truncation(a, 0.0, g0), 24);
  for (std::size_t n = 4; n <= 24; ++n) CHECK(std::abs(c[n]) < 1e-10);
}

TEST_CASE("trisqueezed state") {
  const QGrid g = default_grid(1.0);
  // f = 0: e^{isq} times the squeezed vacuum S(-(-t))
  const double s = 0.8, t = -0.4;
  const PositionWave w = make_trisqueezed(0.0, s, t, g);
  const PositionWave sq = make_gaussian_squeezed(-t, g);
  std::vector<cplx> ref(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) ref[k] = sq[k] * std::polar(1.0, s * g.point(k));
  CHECK(state_fidelity(w, PositionWave(g, ref)) == doctest::Approx(1.0).epsilon(1e-12));

  NumericsConfig n;
  const FockVector c = trisqueezed_coefficients(0.06, n);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k % 3) CHECK(std::abs(c[k]) < 1e-15);
  CHECK(std::abs(c[3]) > 0.1);
  const FockVector pos = position_to_fock(make_trisqueezed(0.06, 0.0, 0.0, default_grid(0.5)), 30);
  for (std::size_t k = 0; k <= 30; ++k) {
    if (k % 3) CHECK(std::abs(pos[k]) < 1e-10);
    else CHECK(std::abs(pos[k] - c[k]) < 1e-8);
  }
  CHECK_THROWS_AS(StateSpec::trisqueezed(0.2, 0, 0).validate(), ContractError);
}

TEST_CASE("bloch superposition") {
  const auto c0 = bloch_coefficients({0.0}, {1.0});
  CHECK(std::abs(c0[0] - 1.0) < 1e-15);
  CHECK(std::abs(c0[1]) < 1e-15);

  const auto c1 = bloch_coefficients({0.904}, {4.712});
  CHECK(std::abs(c1[0] - std::cos(0.904)) < 1e-15);
  CHECK(std::abs(c1[1] - std::sin(0.904) * std::polar(1.0, 4.712)) < 1e-15);
  CHECK(std::abs(c1[0] - 0.618) < 1e-3);
  CHECK(std::abs(c1[1] - cplx(0.0, -0.786)) < 1e-3);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (std::size_t n = 0; n <= 16; ++n) {
    std::vector<double> th(n), ph(n);
    for (auto& v : th) v = u(rng);
    for (auto& v : ph) v = u(rng);
    double s = 0;
    for (auto v : bloch_coefficients(th, ph)) s += std::norm(v);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(make_bloch_superposition({0.1, 0.2}, {0.3}, 0.0, 0.0, default_grid(0.0)), ContractError);

  // N = 1, theta = 0: squeezed vacuum kicked by sqrt(2) d
  const QGrid g = default_grid(1.0);
  const PositionWave b = make_bloch_superposition({0.0}, {0.0}, -0.4, 0.7, g);
  const PositionWave sq = make_gaussian_squeezed(0.4, g);
  std::vector<cplx> ref(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) ref[k] = sq[k] * std::polar(1.0, std::sqrt(2.0) * 0.7 * g.point(k));
  CHECK(state_fidelity(b, PositionWave(g, ref)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact bloch evaluation agrees with the resampling route") {
  const QGrid g = default_grid(1.5);
  const StateSpec spec = StateSpec::bloch({1.549, 0.8929, 0.5605, 1.283, 1.299}, {4.712, 3.14, 4.712, 0.0, 4.712},
                                          -0.1737, 1.4655);
  const PositionWave direct = make_state(spec, g);
  const PositionWave fock = fock_to_position(FockVector(bloch_coefficients(spec.theta, spec.phi)), g);
  const PositionWave resampled = apply_gaussian(fock, bloch_post_op(spec));
  CHECK(max_abs_diff(direct, resampled) < 1e-8);
}

TEST_CASE("apply_gaussian") {
  const QGrid g = default_grid(1.0);
  const PositionWave vac = make_gaussian_squeezed(0.0, g);
  CHECK(max_abs_diff(apply_gaussian(vac, {}), vac) < 1e-12);
  const PositionWave sq = apply_gaussian(vac, {0.0, 0.6, 0.0});
  CHECK(max_abs_diff(sq, make_gaussian_squeezed(-0.6, g)) < 1e-8);

  const PositionWave phi = make_cubic_phase(0.173, 0.3, g);
  for (const GaussianOp op : {GaussianOp{1.3, 0.4, 0.0}, GaussianOp{-0.7, -0.5, 0.3}, GaussianOp{0.2, 0.9, -0.6}}) {
    const PositionWave there = apply_gaussian(phi, op);
    const PositionWave back = apply_gaussian(there, op.inverse());
    CHECK(state_fidelity(phi, back) == doctest::Approx(1.0).epsilon(1e-8));
    // the profile route composes exactly; it must agree with resampling
    const PositionWave exact = StateProfile::from_spec(StateSpec::cubic_phase(0.173, 0.3), g).then(op).sample(g);
    CHECK(max_abs_diff(exact, there) < 1e-8);
    // composition leaves the global phase e^{isd}
    const ComposedOp id = compose(op, op.inverse());
    CHECK(id.op.t == doctest::Approx(0.0));
    CHECK(std::abs(id.op.s) < 1e-14);
    CHECK(std::abs(id.op.d) < 1e-14);
    CHECK(id.phase == doctest::Approx(op.s * op.d));
  }
  // squeezing the vacuum far below the grid step
  const QGrid coarse(12.0, 512);
  CHECK_THROWS_AS(apply_gaussian(make_gaussian_squeezed(0.0, coarse), {0.0, 3.5, 0.0}), GridError);
  // anti-squeezing it past the boundary
  CHECK_THROWS_AS(apply_gaussian(make_gaussian_squeezed(0.0, coarse), {0.0, -1.5, 0.0}), GridError);
  CHECK_THROWS_AS(apply_gaussian(vac, {std::nan(""), 0.0, 0.0}), ContractError);
}

TEST_CASE("reflection symmetry of the undisplaced families") {
  const QGrid g = default_grid(0.8);
  for (const StateSpec& spec : {StateSpec::gaussian_squeezed(0.8), StateSpec::cubic_phase(0.173, 0.8),
                                StateSpec::fock_truncation(0.173, 0.8), StateSpec::operator_truncation(0.173, 0.8)}) {
    const PositionWave w = make_state(spec, g);
    double e = 0;
    for (std::size_t k = 0; k < g.size(); ++k) e = std::max(e, std::abs(std::abs(w[k]) - std::abs(w[g.size() - 1 - k])));
    CHECK(e < 1e-10);
  }
}

TEST_CASE("fock-basis and position-basis fidelities agree") {
  const QGrid g = default_grid(0.5);
  for (double r : {0.0, 0.3, 0.5}) {
    const FockVector c1 = fock_truncation_coefficients(0.173, r, g);
    std::vector<cplx> pad(c1.coefficients().begin(), c1.coefficients().end());
    pad.resize(6);
    const std::vector<double> th{0.6, 1.1, 0.4, 2.0, 0.9}, ph{4.7, 0.3, 1.57, 2.2, 5.0};
    const auto cb = bloch_coefficients(th, ph);
    const double f_fock = std::norm(FockVector(pad).inner(FockVector(cb)));
    const double f_pos = state_fidelity(make_fock_truncation(0.173, r, g), make_bloch_superposition(th, ph, 0.0, 0.0, g));
    CHECK(std::abs(f_fock - f_pos) < 1e-8);
  }
}

TEST_CASE("state spec validation and text form") {
  StateSpec bad = StateSpec::gaussian_squeezed(0.3);
  bad.a = 0.1;
  CHECK_THROWS_AS(bad.validate(), ContractError);
  CHECK_THROWS_AS(StateSpec::cubic_phase(-0.1, 0.0).validate(), ContractError);
  CHECK_THROWS_AS(StateSpec::bloch(std::vector<double>(17, 0.1), std::vector<double>(17, 0.1), 0, 0).validate(),
                  ContractError);
  CHECK_THROWS_AS(StateSpec::cubic_phase(0.1, std::nan("")).validate(), ContractError);

  for (const StateSpec& s : {StateSpec::gaussian_squeezed(-0.1025), StateSpec::fock_truncation(0.173, 0.3),
                             StateSpec::trisqueezed(cplx(0.05, -0.01), 0.37, -0.0864),
                             StateSpec::bloch({0.904}, {4.712}, -0.246, 0.871)}) {
    CHECK(StateSpec::parse(s.serialize()) == s);
  }
  CHECK(StateSpec::parse("family = trisqueezed\nf = 0.05\ns = 0\nt = 0.1\n").f == cplx(0.05, 0.0));
  CHECK_THROWS_AS(StateSpec::parse("family = gaussian_squeezed\nr = 0.1\na = 0.2\n"), ConfigError);
  CHECK_THROWS_AS(StateSpec::parse("family = nope\n"), ConfigError);
  CHECK_THROWS_AS(StateSpec::parse("family = bloch_superposition\nn = 2\ntheta = 0.1\nphi = 0.2\n"), Error);
}

TEST_CASE("every constructor returns a normalized wave") {
  const QGrid g = default_grid(1.2);
  for (const StateSpec& s : {StateSpec::gaussian_squeezed(1.2), StateSpec::cubic_phase(0.173, 1.2),
                             StateSpec::fock_truncation(0.173, 1.2), StateSpec::operator_truncation(0.173, 1.2),
                             StateSpec::trisqueezed(0.07, 0.5, -0.3), StateSpec::bloch({1.0, 2.0}, {0.5, 4.0}, 0.9, -1.0)}) {
    CHECK(make_state(s, g).norm2() == doctest::Approx(1.0).epsilon(1e-10));
  }
}
