#include "kinklab/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kinklab {

namespace {

// sin^2 K - h^2/4 - c^2 K^2; roots are the imaginary eigenvalues Lambda = 2iK.
double root_function(double K, double c, double h) {
  const double s = std::sin(K);
  return s * s - 0.25 * h * h - c * c * K * K;
}

double bisect_root(double a, double b, double c, double h) {
  double fa = root_function(a, c, h);
  for (int i = 0; i < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = root_function(mid, c, h);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string to_string(QuarticLabel label) {
  switch (label) {
    case QuarticLabel::FourReal: return "FourReal";
    case QuarticLabel::TwoRealTwoImaginary: return "TwoRealTwoImaginary";
    case QuarticLabel::FourImaginary: return "FourImaginary";
    case QuarticLabel::ComplexQuartet: return "ComplexQuartet";
    case QuarticLabel::DoubleZeroPlusPair: return "DoubleZeroPlusPair";
    case QuarticLabel::DoubleImaginaryPair: return "DoubleImaginaryPair";
    case QuarticLabel::QuadrupleZero: return "QuadrupleZero";
  }
  return "?";
}

std::complex<double> eval_D(std::complex<double> Lambda, double c, double h) {
  return 2.0 * (std::cosh(Lambda) - 1.0) + h * h - c * c * Lambda * Lambda;
}

std::vector<double> imaginary_roots(double c, double h, double k_max, double grid_step) {
  if (!(k_max > 0.0)) throw std::invalid_argument("imaginary_roots requires k_max > 0");
  if (!(grid_step > 0.0)) throw std::invalid_argument("imaginary_roots requires grid_step > 0");
  std::vector<double> roots;

  // K = 0 is a root only when h = 0 (double or quadruple zero of D); it never
  // produces a sign change, so it is detected directly.
  if (std::abs(root_function(0.0, c, h)) < 1e-14) roots.push_back(0.0);

  const double step = std::min(grid_step, std::numbers::pi / 64.0);
  double a = step;
  double fa = root_function(a, c, h);
  while (a < k_max) {
    const double b = std::min(a + step, k_max);
    const double fb = root_function(b, c, h);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0)) {
      roots.push_back(bisect_root(a, b, c, h));
    }
    a = b;
    fa = fb;
    if (b >= k_max) break;
  }
  if (root_function(k_max, c, h) == 0.0) roots.push_back(k_max);

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-12; }),
              roots.end());
  return roots;
}

BifurcationPoint bifurcation_point(double P) {
  if (!(P > 0.0 && P < 0.5 * std::numbers::pi))
    throw std::invalid_argument("bifurcation_point requires 0 < P < pi/2");
  const double sp = std::sin(P);
  const double cp = std::cos(P);
  const double c2 = sp * cp / P;
  const double h2 = 4.0 * sp * (sp - P * cp);
  return {P, std::sqrt(c2), std::sqrt(h2)};
}

QuarticClass classify_quartic(double gamma, double tau) {
  constexpr double tol = 1e-12;
  QuarticClass out{};

  const auto fill_pair = [&out](int slot, std::complex<double> lambda_sq) {
    const std::complex<double> r = std::sqrt(lambda_sq);
    out.roots[2 * slot] = r;
    out.roots[2 * slot + 1] = -r;
  };

  if (std::abs(gamma) <= tol && std::abs(tau) <= tol) {
    out.label = QuarticLabel::QuadrupleZero;
    out.roots = {0.0, 0.0, 0.0, 0.0};
    return out;
  }
  if (std::abs(tau) <= tol) {
    // Lambda^2 in {12 gamma, 0}: double zero plus a symmetric pair.
    out.label = QuarticLabel::DoubleZeroPlusPair;
    fill_pair(0, std::complex<double>(12.0 * gamma, 0.0));
    out.roots[2] = 0.0;
    out.roots[3] = 0.0;
    return out;
  }
  if (std::abs(tau - 3.0 * gamma * gamma) <= tol) {
    // Discriminant vanishes: Lambda^2 = 6 gamma is a double root of the
    // bi-quadratic. Reported once per pair, multiplicity carried by the label.
    fill_pair(0, std::complex<double>(6.0 * gamma, 0.0));
    fill_pair(1, std::complex<double>(6.0 * gamma, 0.0));
    out.label = gamma < 0.0 ? QuarticLabel::DoubleImaginaryPair : QuarticLabel::FourReal;
    return out;
  }

  const double disc = gamma * gamma - tau / 3.0;
  if (disc < 0.0) {
    out.label = QuarticLabel::ComplexQuartet;
    const std::complex<double> sq = std::sqrt(std::complex<double>(disc, 0.0));
    fill_pair(0, 6.0 * (gamma + sq));
    fill_pair(1, 6.0 * (gamma - sq));
    return out;
  }

  const double root_disc = std::sqrt(disc);
  const double s_hi = 6.0 * (gamma + root_disc);
  const double s_lo = 6.0 * (gamma - root_disc);
  fill_pair(0, std::complex<double>(s_hi, 0.0));
  fill_pair(1, std::complex<double>(s_lo, 0.0));
  if (s_lo > 0.0)
    out.label = QuarticLabel::FourReal;
  else if (s_hi < 0.0)
    out.label = QuarticLabel::FourImaginary;
  else
    out.label = QuarticLabel::TwoRealTwoImaginary;
  return out;
}

double zero_state_growth(double kappa, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("zero_state_growth requires h > 0");
  const double s = std::sin(0.5 * kappa * h);
  return 1.0 - 4.0 / (h * h) * s * s;
}

}  // namespace kinklab
