#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cvq/error.hpp"
#include "cvq/numerics/fock.hpp"
#include "cvq/numerics/grid.hpp"
#include "cvq/numerics/hermite.hpp"
#include "cvq/numerics/quadrature.hpp"
#include "cvq/numerics/settings.hpp"
#include "cvq/numerics/spectral.hpp"
#include "cvq/states/states.hpp"

using namespace cvq;

namespace {

const double kPi = std::numbers::pi;

PositionWave vacuum(const QGrid& g) {
  std::vector<cplx> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = std::pow(kPi, -0.25) * std::exp(-0.5 * g.point(k) * g.point(k));
  return PositionWave(g, std::move(v));
}

}  // namespace

TEST_CASE("grid points are uniform and mirrored") {
  const QGrid g(7.5, 1000);
  CHECK(g.step() == doctest::Approx(15.0 / 999.0));
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.point(k) == -g.point(g.size() - 1 - k));
  CHECK(g.point(0) == -7.5);
  CHECK_THROWS_AS(QGrid(0.0, 10), ContractError);
  CHECK_THROWS_AS(QGrid(1.0, 1), ContractError);
}

TEST_CASE("simpson weights integrate cubics exactly, odd and even interval counts") {
  for (std::size_t m : {9, 10, 11, 64, 65}) {
    const QGrid g(2.0, m);
    std::vector<double> f(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double q = g.point(k);
      f[k] = 1.0 + q + q * q + q * q * q;
    }
    CHECK(integrate(f, g) == doctest::Approx(4.0 + 16.0 / 3.0).epsilon(1e-13));
    const auto w = g.weights();
    for (std::size_t k = 0; k < m; ++k) CHECK(w[k] == w[m - 1 - k]);
  }
}

TEST_CASE("integrate: gaussian, odd integrand, cubic phase oracle") {
  const QGrid g(12.0, 4096);
  std::vector<cplx> gauss(g.size()), odd(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double q = g.point(k);
    gauss[k] = std::exp(-q * q);
    odd[k] = q * std::exp(-q * q);
  }
  CHECK(std::abs(integrate(gauss, g) - std::sqrt(kPi)) < 1e-10);
  CHECK(std::abs(integrate(odd, g)) < 1e-12);

  // adaptive quadrature (30 digits) of exp(i 0.173 q^3 - q^2/2) over [-14, 14]
  const QGrid g2(14.0, 8192);
  std::vector<cplx> osc(g2.size());
  for (std::size_t k = 0; k < g2.size(); ++k) {
    const double q = g2.point(k);
    osc[k] = std::exp(cplx(-0.5 * q * q, 0.173 * q * q * q));
  }
  const cplx v = integrate(osc, g2);
  CHECK(std::abs(v - cplx(2.2364200072995622, 0.0)) < 1e-8);

  CHECK_THROWS_AS(integrate(std::vector<cplx>(3), g2), ContractError);
}

TEST_CASE("normalize and tail check") {
  const QGrid g(10.0, 2048);
  PositionWave w = vacuum(g);
  for (auto& v : w.amplitudes()) v *= 3.0;
  CHECK(w.normalized().norm2() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.tails_decay());

  std::vector<cplx> wide(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) wide[k] = std::exp(-0.5 * std::pow(g.point(k) / 4.0, 2));
  const PositionWave bad(g, wide);
  CHECK_FALSE(bad.tails_decay());
  try {
    bad.require_tail_decay("test");
    FAIL("expected GridError");
  } catch (const GridError& e) {
    CHECK(e.required_half_extent() > g.half_extent());
  }
}

TEST_CASE("spectral derivatives of the vacuum") {
  const QGrid g(12.0, 4096);
  const PositionWave phi = vacuum(g);
  const PositionWave d1 = spectral_derivative(phi, 1);
  const PositionWave d2 = spectral_derivative(phi, 2);
  const PositionWave d11 = spectral_derivative(d1, 1);
  double e1 = 0, e2 = 0, e11 = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double q = g.point(k);
    if (std::abs(q) > g.half_extent() / 2) continue;
    e1 = std::max(e1, std::abs(d1[k] - (-q * phi[k])));
    e2 = std::max(e2, std::abs(d2[k] - (q * q - 1.0) * phi[k]));
    e11 = std::max(e11, std::abs(d11[k] - d2[k]));
  }
  CHECK(e1 < 1e-8);
  CHECK(e2 < 1e-8);
  CHECK(e11 < 1e-6);
  CHECK_THROWS_AS(spectral_derivative(phi, 3), ContractError);
}

TEST_CASE("spectral derivative of squeezed vacuum against 8th-order finite differences") {
  const QGrid g = default_grid(0.8);
  const PositionWave phi = make_gaussian_squeezed(0.8, g);
  const PositionWave d1 = spectral_derivative(phi, 1);
  const double h = g.step();
  const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  double peak = 0.0, worst = 0.0;
  for (std::size_t k = 4; k + 4 < g.size(); ++k) {
    cplx fd = 0.0;
    for (int j = 1; j <= 4; ++j) fd += c[j - 1] * (phi[k + j] - phi[k - j]);
    fd /= h;
    peak = std::max(peak, std::abs(fd));
    worst = std::max(worst, std::abs(fd - d1[k]));
  }
  CHECK(worst / peak < 1e-6);
}

TEST_CASE("spectral derivative refuses waves that reach the boundary") {
  const QGrid g(3.0, 256);
  CHECK_THROWS_AS(spectral_derivative(vacuum(g), 1), GridError);
}

TEST_CASE("hermite polynomials") {
  const std::vector<double> q{-1.5, 0.0, 2.0};
  for (double v : hermite_poly(0, q)) CHECK(v == 1.0);
  CHECK(hermite_poly(3, std::vector<double>{2.0})[0] == doctest::Approx(40.0));
  CHECK_THROWS_AS(hermite_poly(65, q), ConfigError);
  CHECK_NOTHROW(hermite_poly(70, q, 80));

  const QGrid g(12.0, 4096);
  std::vector<std::vector<double>> h;
  for (int n = 0; n <= 10; ++n) h.push_back(hermite_poly(n, g.points()));
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      std::vector<double> f(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) f[k] = h[m][k] * h[n][k] * std::exp(-g.point(k) * g.point(k));
      auto norm = [](int k) { return std::sqrt(kPi) * std::pow(2.0, k) * std::tgamma(k + 1.0); };
      const double expect = m == n ? norm(n) : 0.0;
      // relative to the geometric mean of the two norms (up to ~4e9 at n = 10)
      CHECK(std::abs(integrate(f, g) - expect) <= 1e-8 * std::sqrt(norm(m) * norm(n)));
    }
  }
}

TEST_CASE("fock_to_position basics") {
  const QGrid g(12.0, 4096);
  const PositionWave v = fock_to_position(FockVector::basis(0, 4), g);
  const PositionWave one = fock_to_position(FockVector::basis(1, 4), g);
  double e0 = 0, e1 = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double q = g.point(k);
    const double ref = std::pow(kPi, -0.25) * std::exp(-0.5 * q * q);
    e0 = std::max(e0, std::abs(v[k] - ref));
    e1 = std::max(e1, std::abs(one[k] - std::sqrt(2.0) * q * ref));
  }
  CHECK(e0 < 1e-14);
  CHECK(e1 < 1e-14);
  CHECK_THROWS_AS(fock_to_position(FockVector::basis(100, 100), QGrid(8.0, 4096)), GridError);
}

TEST_CASE("position/fock round trip on random coefficients") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01;
  std::vector<cplx> c(11);
  for (auto& v : c) v = {n01(rng), n01(rng)};
  const FockVector in = FockVector(c).normalized();
  const QGrid g(12.0, 4096);
  const FockVector out = position_to_fock(fock_to_position(in, g), 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    const cplx expect = n <= 10 ? in[n] : cplx(0.0);
    CHECK(std::abs(out[n] - expect) < 1e-8);
  }
}

TEST_CASE("position_to_fock: vacuum, parity, cubic phase oracle") {
  const QGrid g(12.0, 4096);
  const FockVector vac = position_to_fock(vacuum(g), 6);
  CHECK(std::abs(vac[0] - 1.0) < 1e-8);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(std::abs(vac[n]) < 1e-8);

  const QGrid gs = default_grid(0.5);
  const FockVector sq = position_to_fock(make_gaussian_squeezed(0.5, gs), 21);
  for (std::size_t n = 1; n <= 21; n += 2) CHECK(std::abs(sq[n]) < 1e-10);

  // adaptive quadrature (30 digits) of <n|phi_c>, a = 0.173, r = 0.3
  const QGrid gc = default_grid(0.3);
  const FockVector c = position_to_fock(make_cubic_phase(0.173, 0.3, gc), 3);
  const cplx oracle[4] = {{0.9348819856507131, 0.0},
                          {0.0, 0.22496914420057599},
                          {0.010296659011546467, 0.0},
                          {0.0, 0.16861227626408594}};
  for (int n = 0; n < 4; ++n) CHECK(std::abs(c[n] - oracle[n]) < 1e-8);
}

TEST_CASE("fock operators") {
  const FockOperator a = FockOperator::annihilation(5);
  const FockOperator n = FockOperator::number(5);
  const FockOperator ada = a.adjoint() * a;
  for (std::size_t i = 0; i <= 5; ++i)
    for (std::size_t j = 0; j <= 5; ++j) CHECK(std::abs(ada(i, j) - n(i, j)) < 1e-14);
  const FockOperator gen = trisqueeze_generator(cplx(0.03, 0.01), 30);
  CHECK(gen.anti_hermitian_defect() < 1e-15);
  // compare with the dense product i f a^3 + i f* a^dag^3
  const FockOperator a30 = FockOperator::annihilation(30);
  const FockOperator a3 = a30 * a30 * a30;
  const cplx i1(0, 1);
  const FockOperator ref = a3 * (i1 * cplx(0.03, 0.01)) + a3.adjoint() * (i1 * cplx(0.03, -0.01));
  for (std::size_t i = 0; i <= 30; ++i)
    for (std::size_t j = 0; j <= 30; ++j) CHECK(std::abs(gen(i, j) - ref(i, j)) < 1e-13);
}

TEST_CASE("fock_unitary_exp: identity, eigenstate phase, rejects non anti-Hermitian") {
  const FockVector one = FockVector::basis(1, 20);
  const FockVector same = fock_unitary_exp(FockOperator(21), one);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(std::abs(same[n] - one[n]) < 1e-15);

  const double t = 0.7;
  const FockVector ph = fock_unitary_exp(FockOperator::number(20) * cplx(0.0, t), one);
  CHECK(std::abs(ph[1] - std::polar(1.0, t)) < 1e-12);

  CHECK_THROWS_AS(fock_unitary_exp(FockOperator::number(20), one), ContractError);
}

TEST_CASE("trisqueezed vacuum converges under cutoff doubling") {
  const FockVector v120 = fock_unitary_exp(trisqueeze_generator(0.05, 120), FockVector::basis(0, 120));
  const FockVector v240 = fock_unitary_exp(trisqueeze_generator(0.05, 240), FockVector::basis(0, 240));
  CHECK(std::abs(v120.norm2() - 1.0) < 1e-8);
  std::vector<cplx> padded(v120.coefficients().begin(), v120.coefficients().end());
  padded.resize(241);
  const double overlap = std::norm(FockVector(padded).inner(v240));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-8));
  for (std::size_t n = 0; n <= 120; ++n)
    if (n % 3) CHECK(std::abs(v120[n]) < 1e-14);
}

TEST_CASE("fock_unitary_exp reports leakage") {
  try {
    fock_unitary_exp(trisqueeze_generator(0.12, 60), FockVector::basis(0, 60));
    FAIL("expected CutoffError");
  } catch (const CutoffError& e) {
    CHECK(e.tail_mass() > 1e-8);
  }
}

TEST_CASE("default grid and doubling") {
  CHECK(default_half_extent(0.0) == 12.0);
  CHECK(default_half_extent(-1.0) == doctest::Approx(8.0 * std::exp(1.0) + 4.0));
  const QGrid g(5.0, 100);
  const QGrid d = doubled(g);
  CHECK(d.size() == 200);
  CHECK(d.step() == doctest::Approx(g.step()));
  NumericsConfig pinned;
  pinned.half_extent = 9.0;
  CHECK(default_grid(1.0, pinned).half_extent() == 9.0);
}
