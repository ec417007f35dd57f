#include "kinklab/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/errors.hpp"
#include "kinklab/inverse.hpp"

namespace kinklab {

namespace {

void check_state(const LatticeState& state) {
  if (state.u.size() < 8 || state.u.size() != state.v.size())
    throw std::invalid_argument("lattice state needs equal-length arrays of >= 8 sites");
  if (!(state.h > 0.0)) throw std::invalid_argument("lattice step size must be positive");
}

}  // namespace

std::vector<double> lattice_accel(const LatticeState& state, const Nonlinearity& model) {
  check_state(state);
  const std::size_t n = state.u.size();
  const double inv_h2 = 1.0 / (state.h * state.h);
  std::vector<double> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? state.u_left : state.u[i - 1];
    const double right = i + 1 == n ? state.u_right : state.u[i + 1];
    acc[i] = (right - 2.0 * state.u[i] + left) * inv_h2 + eval_F(model, state.u[i]);
  }
  return acc;
}

void verlet_step(LatticeState& state, double dt, const Nonlinearity& model) {
  if (!(dt > 0.0 && dt < state.h))
    throw std::invalid_argument("verlet_step requires 0 < dt < h");
  const std::vector<double> a0 = lattice_accel(state, model);
  const std::size_t n = state.u.size();
  for (std::size_t i = 0; i < n; ++i) {
    state.u[i] += dt * state.v[i] + 0.5 * dt * dt * a0[i];
    if (!std::isfinite(state.u[i]) || std::abs(state.u[i]) > 1e6)
      throw blow_up_error("lattice displacement diverged");
  }
  const std::vector<double> a1 = lattice_accel(state, model);
  for (std::size_t i = 0; i < n; ++i) state.v[i] += 0.5 * dt * (a0[i] + a1[i]);
}

double lattice_energy(const LatticeState& state, const Nonlinearity& model) {
  check_state(state);
  const std::size_t n = state.u.size();
  const double inv_2h2 = 0.5 / (state.h * state.h);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    e += 0.5 * state.v[i] * state.v[i] - potential(model, state.u[i]);
    const double right = i + 1 == n ? state.u_right : state.u[i + 1];
    e += (right - state.u[i]) * (right - state.u[i]) * inv_2h2;
  }
  const double left_gap = state.u[0] - state.u_left;
  e += left_gap * left_gap * inv_2h2;
  return e;
}

double simulate_exact_kink(double s, double mu, double t_final, double dt,
                           std::size_t n_sites, std::size_t checkpoints,
                           long site_offset) {
  if (!(t_final >= 0.0)) throw std::invalid_argument("t_final must be >= 0");
  if (n_sites < 16) throw std::invalid_argument("simulate_exact_kink needs >= 16 sites");
  const InverseParams p = inverse_params(s, mu);
  const double h = std::sqrt(p.h2);
  if (!(dt > 0.0 && dt < h)) throw std::invalid_argument("need 0 < dt < h");
  const Nonlinearity model = Nonlinearity::inverse(p.alpha, p.beta);

  // Center so the kink ends up mid-domain after travelling s*t_final/h sites.
  const double travel = s * t_final / h;
  const double n0 =
      0.5 * (static_cast<double>(n_sites - 1) - travel) + static_cast<double>(site_offset);
  if (n0 < 10.0 || n0 + travel > static_cast<double>(n_sites - 1) - 10.0)
    throw boundary_contact_error("kink front within 10 sites of a clamped edge");

  const auto exact_u = [&](std::size_t i, double t) {
    return std::tanh(mu * (static_cast<double>(i) - n0 - s * t / h));
  };
  LatticeState state;
  state.h = h;
  state.u_left = -1.0;
  state.u_right = 1.0;
  state.u.resize(n_sites);
  state.v.resize(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) {
    const double T = exact_u(i, 0.0);
    state.u[i] = T;
    state.v[i] = -(s * mu / h) * (1.0 - T * T);
  }

  if (t_final == 0.0) return 0.0;

  const long n_steps = static_cast<long>(std::ceil(t_final / dt));
  const double dt_eff = t_final / static_cast<double>(n_steps);
  const long stride =
      std::max<long>(1, n_steps / static_cast<long>(std::max<std::size_t>(checkpoints, 1)));

  double worst = 0.0;
  for (long step = 1; step <= n_steps; ++step) {
    verlet_step(state, dt_eff, model);
    if (step % stride == 0 || step == n_steps) {
      const double t = dt_eff * static_cast<double>(step);
      for (std::size_t i = 0; i < n_sites; ++i)
        worst = std::max(worst, std::abs(state.u[i] - exact_u(i, t)));
    }
  }
  return worst;
}

}  // namespace kinklab
