#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace kinklab {

// Eigenvalue configuration of the bi-quadratic (1/12) L^4 - gamma L^2 + tau = 0.
enum class QuarticLabel {
  FourReal,
  TwoRealTwoImaginary,
  FourImaginary,
  ComplexQuartet,
  DoubleZeroPlusPair,
  DoubleImaginaryPair,
  QuadrupleZero,
};

std::string to_string(QuarticLabel label);

struct QuarticClass {
  QuarticLabel label;
  std::array<std::complex<double>, 4> roots;
};

struct BifurcationPoint {
  double P;  // double-root location, 0 < P < pi/2
  double c;
  double h;
};

// D(Lambda; c, h) = 2(cosh Lambda - 1) + h^2 - c^2 Lambda^2.
std::complex<double> eval_D(std::complex<double> Lambda, double c, double h);

// Nonnegative roots K <= k_max of sin^2 K = h^2/4 + c^2 K^2, ascending.
// K = 0 is included only when it is a root (h = 0). Mirror-image negative
// roots are implied and not returned. The default bracketing grid is dense
// enough that no root pair hides between nodes for k_max <= 50.
std::vector<double> imaginary_roots(double c, double h, double k_max,
                                    double grid_step = 0.01);

// Point on the 1:1-resonance curve: c^2 = sin P cos P / P,
// h^2 = 4 sin P (sin P - P cos P).
BifurcationPoint bifurcation_point(double P);

QuarticClass classify_quartic(double gamma, double tau);

// Squared growth rate of the zero state: lambda^2 = 1 - (4/h^2) sin^2(kappa h / 2).
double zero_state_growth(double kappa, double h);

}  // namespace kinklab
