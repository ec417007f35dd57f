#pragma once

#include <cstddef>
#include <vector>

#include "kinklab/model.hpp"

namespace kinklab {

// Klein-Gordon chain state with clamped ghost cells: the kink tails are
// exponentially flat, so fixed boundary values u_left/u_right are exact to
// machine precision for any domain wide enough.
struct LatticeState {
  std::vector<double> u;
  std::vector<double> v;
  double h = 1.0;
  double u_left = 0.0;
  double u_right = 0.0;
};

// udd_n = (u_{n+1} - 2 u_n + u_{n-1}) / h^2 + f(u_n), on-site f only.
std::vector<double> lattice_accel(const LatticeState& state, const Nonlinearity& model);

// One velocity-Verlet step; requires 0 < dt < h.
void verlet_step(LatticeState& state, double dt, const Nonlinearity& model);

// Discrete energy sum [v^2/2 + (u_{n+1}-u_n)^2/(2h^2) - V(u_n)], ghost-cell
// half-links included; closed-form potential models only.
double lattice_energy(const LatticeState& state, const Nonlinearity& model);

// Initializes the exact inverse-method kink tanh(mu (n - n0 - s t / h)),
// integrates to t_final, and returns the max over checkpoints of the
// sup-norm deviation from the exact profile. site_offset shifts the start
// position by whole sites within the guard band.
double simulate_exact_kink(double s, double mu, double t_final, double dt,
                           std::size_t n_sites, std::size_t checkpoints = 10,
                           long site_offset = 0);

}  // namespace kinklab
