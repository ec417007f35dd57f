#include "kinklab/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kinklab {

Nonlinearity Nonlinearity::inverse(double alpha, double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("inverse model requires 0 < beta < 1");
  return {ModelKind::Inverse, alpha, beta};
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Phi4: return "phi4";
    case ModelKind::SineGordon: return "sine-gordon";
    case ModelKind::Inverse: return "inverse";
  }
  return "?";
}

double eval_F(const Nonlinearity& model, double u) {
  switch (model.kind) {
    case ModelKind::Phi4:
      return u * (1.0 - u * u);
    case ModelKind::SineGordon:
      return std::sin(u);
    case ModelKind::Inverse: {
      const double u2 = u * u;
      const double den = 1.0 - model.beta * u2;
      if (den == 0.0)
        throw std::domain_error("inverse nonlinearity evaluated at pole beta*u^2 = 1");
      return u * (1.0 - u2) * (1.0 + model.alpha * u2) / den;
    }
  }
  throw std::logic_error("unknown model kind");
}

double eval_F_prime(const Nonlinearity& model, double u) {
  switch (model.kind) {
    case ModelKind::Phi4:
      return 1.0 - 3.0 * u * u;
    case ModelKind::SineGordon:
      return std::cos(u);
    case ModelKind::Inverse: {
      // F = p / q, p = (u - u^3)(1 + alpha u^2), q = 1 - beta u^2
      const double u2 = u * u;
      const double den = 1.0 - model.beta * u2;
      if (den == 0.0)
        throw std::domain_error("inverse nonlinearity evaluated at pole beta*u^2 = 1");
      const double p = (u - u * u2) * (1.0 + model.alpha * u2);
      const double dp = (1.0 - 3.0 * u2) * (1.0 + model.alpha * u2) +
                        (u - u * u2) * (2.0 * model.alpha * u);
      const double dq = -2.0 * model.beta * u;
      return (dp * den - p * dq) / (den * den);
    }
  }
  throw std::logic_error("unknown model kind");
}

double potential(const Nonlinearity& model, double u) {
  switch (model.kind) {
    case ModelKind::Phi4:
      return 0.5 * u * u - 0.25 * u * u * u * u;
    case ModelKind::SineGordon:
      return -std::cos(u);
    case ModelKind::Inverse:
      throw std::invalid_argument("no closed-form potential for the inverse model");
  }
  throw std::logic_error("unknown model kind");
}

double u_plus(const Nonlinearity& model) {
  return model.kind == ModelKind::SineGordon ? std::numbers::pi : 1.0;
}

double u_minus(const Nonlinearity& model) { return -u_plus(model); }

double sigma_from(double gamma, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("sigma_from requires tau > 0");
  return -std::sqrt(12.0) * gamma / std::sqrt(tau);
}

NormalFormParams normal_form_params(double gamma, double tau) {
  return {gamma, tau, sigma_from(gamma, tau)};
}

}  // namespace kinklab
