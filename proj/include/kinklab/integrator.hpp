#pragma once

#include <vector>

#include "kinklab/model.hpp"

namespace kinklab {

// Phase point of the normalized fourth-order equation
// phi'''' + sigma phi'' + F(phi) = 0, written as a first-order system.
struct State4 {
  double phi = 0.0;
  double dphi = 0.0;
  double d2phi = 0.0;
  double d3phi = 0.0;

  friend State4 operator+(const State4& a, const State4& b) {
    return {a.phi + b.phi, a.dphi + b.dphi, a.d2phi + b.d2phi, a.d3phi + b.d3phi};
  }
  friend State4 operator*(double s, const State4& a) {
    return {s * a.phi, s * a.dphi, s * a.d2phi, s * a.d3phi};
  }
};

State4 rhs(const State4& state, double sigma, const Nonlinearity& model);

// One classical RK4 step; throws blow_up_error on non-finite output or when
// the divergence guard trips (|phi| > 10 u_plus or any component > 1e6).
State4 rk4_step(const State4& state, double dt, double sigma, const Nonlinearity& model);

// Linearization rates at the non-zero equilibria: one real pair
// (lambda0, -lambda0) and one imaginary pair (+-i omega0), roots of
// x^2 + sigma x + F'(u_plus) = 0 in x = lambda^2.
struct EquilibriumRates {
  double lambda0;
  double omega0;
};

EquilibriumRates equilibrium_rates(double sigma, double fprime_at_plus);

// Initial point on the one-dimensional unstable manifold of u_minus:
// (u_minus + c0, c0 lambda0, c0 lambda0^2, c0 lambda0^3).
State4 unstable_ic(double c0, double lambda0, double u_minus);

// First integral E = phi' phi''' - phi''^2/2 + sigma phi'^2/2 + V(phi);
// needs the closed-form potential (Phi4, SineGordon).
double energy(const State4& state, double sigma, const Nonlinearity& model);

bool blow_up(const State4& state, const Nonlinearity& model);

// Fixed-step trajectory: returns n_steps + 1 states at t = 0, dt, ..., n_steps*dt.
std::vector<State4> integrate_trajectory(const State4& initial, double sigma,
                                         const Nonlinearity& model, double dt,
                                         long n_steps);

}  // namespace kinklab
