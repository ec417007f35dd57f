#include "kinklab/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kinklab/errors.hpp"
#include "kinklab/model.hpp"

namespace kinklab {

InverseParams inverse_params(double s, double mu) {
  if (!(s > 0.0)) throw std::invalid_argument("inverse_params requires s > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("inverse_params requires mu > 0");
  const double t = std::tanh(mu);
  const double beta = t * t;
  const double sm2 = s * s * mu * mu;
  const double h2 = 2.0 * (beta - sm2);
  if (!(h2 > 0.0))
    throw no_real_lattice_error("tanh^2(mu) <= s^2 mu^2: no real lattice spacing");
  const double alpha = sm2 * beta / (beta - sm2);
  return {s, mu, alpha, beta, h2};
}

std::vector<double> mu_s_roots(double gamma_s, double tau) {
  // mu^2 = (3/4)(-gamma_s +- sqrt(gamma_s^2 - (4/3) tau))
  const double disc = gamma_s * gamma_s - (4.0 / 3.0) * tau;
  std::vector<double> roots;
  if (disc < 0.0) return roots;
  const double root_disc = std::sqrt(disc);
  const double hi = 0.75 * (-gamma_s + root_disc);
  const double lo = 0.75 * (-gamma_s - root_disc);
  if (hi > 0.0) roots.push_back(std::sqrt(hi));
  if (disc > 0.0 && lo > 0.0) roots.push_back(std::sqrt(lo));
  return roots;  // descending by construction
}

namespace {

struct TanhJet {
  double f, d2, d4;  // value, second, fourth derivative of tanh(m z)
};

TanhJet tanh_jet(double m, double z) {
  const double T = std::tanh(m * z);
  const double sech2 = 1.0 - T * T;
  const double m2 = m * m;
  TanhJet out;
  out.f = T;
  out.d2 = -2.0 * m2 * T * sech2;
  out.d4 = 8.0 * m2 * m2 * T * sech2 * (2.0 - 3.0 * T * T);
  return out;
}

}  // namespace

double normalform_residual(double gamma_s, double tau, double mu_s,
                           const std::vector<double>& z_grid) {
  double worst = 0.0;
  const double mu4 = mu_s * mu_s * mu_s * mu_s;
  for (double z : z_grid) {
    const TanhJet jet = tanh_jet(mu_s, z);
    const double cubic_gap = jet.f * (1.0 - jet.f * jet.f);
    const double residual = jet.d4 / 12.0 - gamma_s * jet.d2 + tau * cubic_gap +
                            2.0 * mu4 * jet.f * jet.f * cubic_gap;
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

double advance_delay_residual(double s, double mu, const std::vector<double>& zeta_grid) {
  const InverseParams p = inverse_params(s, mu);
  const Nonlinearity model = Nonlinearity::inverse(p.alpha, p.beta);
  double worst = 0.0;
  for (double z : zeta_grid) {
    const TanhJet jet = tanh_jet(mu, z);
    const double shifted = std::tanh(mu * (z + 1.0)) - 2.0 * jet.f + std::tanh(mu * (z - 1.0));
    const double residual = s * s * jet.d2 - shifted - p.h2 * eval_F(model, jet.f);
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(i + 1 == count ? hi : lo + step * static_cast<double>(i));
  return out;
}

}  // namespace kinklab
