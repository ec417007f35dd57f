#pragma once

#include <string>

namespace kinklab {

enum class ModelKind { Phi4, SineGordon, Inverse };

// On-site nonlinearity F(u) of the Klein-Gordon chain. F is odd, F'(0) = 1,
// and F vanishes with negative slope at u = +-u_plus. The Inverse kind is the
// rational nonlinearity u(1-u^2)(1+alpha*u^2)/(1-beta*u^2) with frozen
// (alpha, beta); they are stored, never recomputed from (s, mu).
struct Nonlinearity {
  ModelKind kind = ModelKind::Phi4;
  double alpha = 0.0;  // Inverse only
  double beta = 0.0;   // Inverse only, 0 < beta < 1

  static Nonlinearity phi4() { return {ModelKind::Phi4, 0.0, 0.0}; }
  static Nonlinearity sine_gordon() { return {ModelKind::SineGordon, 0.0, 0.0}; }
  static Nonlinearity inverse(double alpha, double beta);
};

std::string to_string(ModelKind kind);

double eval_F(const Nonlinearity& model, double u);
double eval_F_prime(const Nonlinearity& model, double u);

// Antiderivative V with V' = F, V(0) = 0 for Phi4 and V(0) = -1 for
// SineGordon. The Inverse model has no closed form here and is rejected.
double potential(const Nonlinearity& model, double u);

// Positive equilibrium: 1 for Phi4/Inverse, pi for SineGordon.
double u_plus(const Nonlinearity& model);
double u_minus(const Nonlinearity& model);

// sigma = -sqrt(12) * gamma / sqrt(tau), tau > 0.
double sigma_from(double gamma, double tau);

struct NormalFormParams {
  double gamma;
  double tau;
  double sigma;
};

NormalFormParams normal_form_params(double gamma, double tau);

}  // namespace kinklab
