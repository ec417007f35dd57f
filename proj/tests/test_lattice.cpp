#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "kinklab/dispersion.hpp"
#include "kinklab/errors.hpp"
#include "kinklab/inverse.hpp"
#include "kinklab/lattice.hpp"

using namespace kinklab;

namespace {
const Nonlinearity kPhi4 = Nonlinearity::phi4();
const Nonlinearity kSg = Nonlinearity::sine_gordon();
constexpr double kPi = std::numbers::pi;

LatticeState uniform_state(std::size_t n, double value, double h) {
  LatticeState s;
  s.h = h;
  s.u_left = value;
  s.u_right = value;
  s.u.assign(n, value);
  s.v.assign(n, 0.0);
  return s;
}
}  // namespace

TEST_CASE("lattice_accel at equilibria") {
  for (double acc : lattice_accel(uniform_state(32, 1.0, 0.7), kPhi4)) CHECK(acc == 0.0);
  for (double acc : lattice_accel(uniform_state(32, 0.0, 0.7), kPhi4)) CHECK(acc == 0.0);
  for (double acc : lattice_accel(uniform_state(32, kPi, 0.7), kSg))
    CHECK(std::abs(acc) < 1e-13);
}

TEST_CASE("lattice_accel on the exact kink equals the travelling profile") {
  const double s = 0.8, mu = 0.5;
  const auto p = inverse_params(s, mu);
  const double h = std::sqrt(p.h2);
  const auto model = Nonlinearity::inverse(p.alpha, p.beta);

  LatticeState state;
  state.h = h;
  state.u_left = -1.0;
  state.u_right = 1.0;
  const std::size_t n = 200;
  const double n0 = 99.5;
  for (std::size_t i = 0; i < n; ++i) {
    const double T = std::tanh(mu * (static_cast<double>(i) - n0));
    state.u.push_back(T);
    state.v.push_back(-(s * mu / h) * (1.0 - T * T));
  }
  const auto acc = lattice_accel(state, model);
  // u_n(t) = phi(n - n0 - s t/h) gives udd = (s/h)^2 phi''
  for (std::size_t i = 0; i < n; ++i) {
    const double T = state.u[i];
    const double phi_dd = -2.0 * mu * mu * T * (1.0 - T * T);
    CHECK(std::abs(acc[i] - (s * s / (h * h)) * phi_dd) < 1e-10);
  }
}

TEST_CASE("verlet_step basics") {
  auto eq = uniform_state(32, 1.0, 0.7);
  verlet_step(eq, 0.01, kPhi4);
  for (double u : eq.u) CHECK(u == 1.0);
  for (double v : eq.v) CHECK(v == 0.0);
  CHECK_THROWS_AS(verlet_step(eq, 0.7, kPhi4), std::invalid_argument);  // dt >= h
  CHECK_THROWS_AS(verlet_step(eq, 0.0, kPhi4), std::invalid_argument);

  auto tiny = uniform_state(8, 1.0, 0.7);
  tiny.u.resize(4);  // arrays below the minimum, and mismatched with v
  CHECK_THROWS_AS(lattice_accel(tiny, kPhi4), std::invalid_argument);
}

TEST_CASE("u_plus is neutrally stable under a single-site kick") {
  auto state = uniform_state(64, 1.0, 0.7);
  state.u[32] = 1.0 + 1e-3;
  double worst = 0.0;
  const double dt = 0.01;
  for (int i = 0; i < 2000; ++i) {  // t = 20
    verlet_step(state, dt, kPhi4);
    for (double u : state.u) worst = std::max(worst, std::abs(u - 1.0));
  }
  CHECK(worst < 3e-3);  // oscillates, no growth
}

TEST_CASE("zero state grows at the dispersion-relation rate") {
  // Dirichlet eigenmode sin(kappa h (i+1)) with kappa h = m pi / (N+1)
  const std::size_t n = 63;
  const double h = 1.0;
  const int mode = 10;
  const double kappa = mode * kPi / 64.0;  // kappa h, with h = 1
  const double lambda2 = zero_state_growth(kappa, h);
  REQUIRE(lambda2 > 0.0);
  const double lambda = std::sqrt(lambda2);

  auto state = uniform_state(n, 0.0, h);
  const double amp0 = 1e-6;
  for (std::size_t i = 0; i < n; ++i)
    state.u[i] = amp0 * std::sin(kappa * static_cast<double>(i + 1));

  const double dt = 0.01;
  const auto peak = [&] {
    double worst = 0.0;
    for (double u : state.u) worst = std::max(worst, std::abs(u));
    return worst;
  };
  double amp_mid = 0.0;
  for (int i = 1; i <= 500; ++i) {
    verlet_step(state, dt, kPhi4);
    if (i == 250) amp_mid = peak();
  }
  const double rate = std::log(peak() / amp_mid) / 2.5;
  CHECK(rate == doctest::Approx(lambda).epsilon(0.05));
}

TEST_CASE("reflection symmetry of the flow") {
  const double h = 0.7;
  auto state = uniform_state(48, 0.0, h);
  for (std::size_t i = 0; i < state.u.size(); ++i) {
    state.u[i] = 0.3 * std::sin(0.4 * static_cast<double>(i));
    state.v[i] = 0.1 * std::cos(0.9 * static_cast<double>(i));
  }
  state.u_left = 0.05;
  state.u_right = -0.02;

  LatticeState mirror;
  mirror.h = h;
  mirror.u_left = -state.u_right;
  mirror.u_right = -state.u_left;
  mirror.u.assign(state.u.rbegin(), state.u.rend());
  mirror.v.assign(state.v.rbegin(), state.v.rend());
  for (double& u : mirror.u) u = -u;
  for (double& v : mirror.v) v = -v;

  for (int i = 0; i < 200; ++i) {
    verlet_step(state, 0.01, kPhi4);
    verlet_step(mirror, 0.01, kPhi4);
  }
  for (std::size_t i = 0; i < state.u.size(); ++i) {
    CHECK(std::abs(mirror.u[i] + state.u[state.u.size() - 1 - i]) < 1e-13);
    CHECK(std::abs(mirror.v[i] + state.v[state.u.size() - 1 - i]) < 1e-13);
  }
}

TEST_CASE("translation invariance under integer site shifts") {
  const double h = 0.7;
  auto narrow = uniform_state(48, 0.0, h);
  auto wide = uniform_state(54, 0.0, h);
  for (std::size_t i = 0; i < narrow.u.size(); ++i) {
    narrow.u[i] = 0.2 * std::exp(-0.05 * (static_cast<double>(i) - 24.0) *
                                 (static_cast<double>(i) - 24.0));
    wide.u[i + 3] = narrow.u[i];
  }
  for (int i = 0; i < 300; ++i) {
    verlet_step(narrow, 0.01, kPhi4);
    verlet_step(wide, 0.01, kPhi4);
  }
  // interior far from the differing boundaries
  for (std::size_t i = 8; i + 8 < narrow.u.size(); ++i)
    CHECK(std::abs(narrow.u[i] - wide.u[i + 3]) < 1e-12);
}

TEST_CASE("verlet quasi-conserves the discrete energy at second order") {
  for (const auto& model : {kPhi4, kSg}) {
    const double base = model.kind == ModelKind::SineGordon ? kPi : 1.0;
    const auto drift = [&](double dt) {
      auto state = uniform_state(64, base, 0.7);
      for (std::size_t i = 0; i < state.u.size(); ++i)
        state.u[i] = base + 1e-2 * std::sin(0.3 * static_cast<double>(i)) *
                                std::sin(1.7 * static_cast<double>(i));
      const double e0 = lattice_energy(state, model);
      double worst = 0.0;
      const long n = std::lround(10.0 / dt);
      for (long i = 0; i < n; ++i) {
        verlet_step(state, dt, model);
        worst = std::max(worst, std::abs(lattice_energy(state, model) - e0));
      }
      return worst;
    };
    const double coarse = drift(0.05);
    const double fine = drift(0.05 / 4.0);
    CHECK(coarse < 1e-3);                  // bounded, no secular growth
    CHECK(coarse / fine > 10.0);           // O(dt^2) amplitude
    CHECK(coarse / fine < 22.0);
  }
}

TEST_CASE("exact kink propagates without deformation") {
  const double s = 0.8, mu = 0.5;
  const auto p = inverse_params(s, mu);
  const double h = std::sqrt(p.h2);
  const double t_final = 10.0 * h / s;

  CHECK(simulate_exact_kink(s, mu, 0.0, h / 50.0, 400) == 0.0);

  const double err = simulate_exact_kink(s, mu, t_final, h / 50.0, 400);
  CHECK(err < 1e-4);
  const double err_half = simulate_exact_kink(s, mu, t_final, h / 100.0, 400);
  const double ratio = err / err_half;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);

  // integer site shifts leave the propagation error unchanged (the tails are
  // flat to machine precision well before the clamps)
  const double shifted = simulate_exact_kink(s, mu, t_final, h / 50.0, 400, 10, 17);
  CHECK(std::abs(shifted - err) < 1e-12);

  // long travel on a short domain puts the front within the guard band
  CHECK_THROWS_AS(simulate_exact_kink(s, mu, 300.0 * h / s, h / 50.0, 64),
                  boundary_contact_error);
}
