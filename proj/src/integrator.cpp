#include "kinklab/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/errors.hpp"

namespace kinklab {

State4 rhs(const State4& state, double sigma, const Nonlinearity& model) {
  return {state.dphi, state.d2phi, state.d3phi,
          -sigma * state.d2phi - eval_F(model, state.phi)};
}

bool blow_up(const State4& state, const Nonlinearity& model) {
  if (!std::isfinite(state.phi) || !std::isfinite(state.dphi) ||
      !std::isfinite(state.d2phi) || !std::isfinite(state.d3phi))
    return true;
  if (std::abs(state.phi) > 10.0 * u_plus(model)) return true;
  const double cap = 1e6;
  return std::abs(state.dphi) > cap || std::abs(state.d2phi) > cap ||
         std::abs(state.d3phi) > cap;
}

State4 rk4_step(const State4& state, double dt, double sigma, const Nonlinearity& model) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step requires dt > 0");
  const State4 k1 = rhs(state, sigma, model);
  const State4 k2 = rhs(state + 0.5 * dt * k1, sigma, model);
  const State4 k3 = rhs(state + 0.5 * dt * k2, sigma, model);
  const State4 k4 = rhs(state + dt * k3, sigma, model);
  const State4 next =
      state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (blow_up(next, model)) throw blow_up_error("trajectory diverged in rk4_step");
  return next;
}

EquilibriumRates equilibrium_rates(double sigma, double fprime_at_plus) {
  if (!(fprime_at_plus < 0.0))
    throw std::invalid_argument("equilibrium_rates requires F'(u_plus) < 0");
  const double disc = std::sqrt(sigma * sigma - 4.0 * fprime_at_plus);
  return {std::sqrt(0.5 * (-sigma + disc)), std::sqrt(0.5 * (sigma + disc))};
}

State4 unstable_ic(double c0, double lambda0, double u_minus) {
  if (!(c0 > 0.0)) throw std::invalid_argument("unstable_ic requires c0 > 0");
  return {u_minus + c0, c0 * lambda0, c0 * lambda0 * lambda0,
          c0 * lambda0 * lambda0 * lambda0};
}

double energy(const State4& state, double sigma, const Nonlinearity& model) {
  return state.dphi * state.d3phi - 0.5 * state.d2phi * state.d2phi +
         0.5 * sigma * state.dphi * state.dphi + potential(model, state.phi);
}

std::vector<State4> integrate_trajectory(const State4& initial, double sigma,
                                         const Nonlinearity& model, double dt,
                                         long n_steps) {
  std::vector<State4> out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.push_back(initial);
  State4 s = initial;
  for (long i = 0; i < n_steps; ++i) {
    s = rk4_step(s, dt, sigma, model);
    out.push_back(s);
  }
  return out;
}

}  // namespace kinklab
