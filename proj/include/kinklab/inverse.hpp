#pragma once

#include <vector>

namespace kinklab {

// Parameters of the rational nonlinearity that makes tanh(mu z) an exact
// travelling kink of the lattice at speed s.
struct InverseParams {
  double s;
  double mu;
  double alpha;
  double beta;  // tanh^2(mu)
  double h2;    // 2 (tanh^2 mu - s^2 mu^2), must be > 0
};

// Throws no_real_lattice_error when tanh^2(mu) <= s^2 mu^2.
InverseParams inverse_params(double s, double mu);

// Positive roots of (4/3) mu^4 + 2 gamma_s mu^2 + tau = 0, descending.
// Two roots for gamma_s < 0, 0 < tau < (3/4) gamma_s^2; one double root on
// the boundary; possibly fewer elsewhere.
std::vector<double> mu_s_roots(double gamma_s, double tau);

// Max |(1/12) phi'''' - gamma_s phi'' + tau phi(1-phi^2) + 2 mu_s^4 phi^3 (1-phi^2)|
// over the grid for phi = tanh(mu_s z), all derivatives analytic.
double normalform_residual(double gamma_s, double tau, double mu_s,
                           const std::vector<double>& z_grid);

// Max |c^2 phi'' - [phi(z+1) - 2 phi(z) + phi(z-1)] - h^2 f(phi)| over the grid
// for phi = tanh(mu z), c = s, with (alpha, beta, h^2) from inverse_params.
double advance_delay_residual(double s, double mu, const std::vector<double>& zeta_grid);

std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace kinklab
