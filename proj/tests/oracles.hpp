// Test-only reference implementations, kept independent of the library paths
// they are used to check.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kinklab/integrator.hpp"
#include "kinklab/model.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Adaptive step-doubling RK4 with local tolerance control.

inline double state_gap(const kinklab::State4& a, const kinklab::State4& b) {
  return std::max(std::max(std::abs(a.phi - b.phi), std::abs(a.dphi - b.dphi)),
                  std::max(std::abs(a.d2phi - b.d2phi), std::abs(a.d3phi - b.d3phi)));
}

inline kinklab::State4 ref_integrate(kinklab::State4 s, double t_begin, double t_end,
                                     double sigma, const kinklab::Nonlinearity& model,
                                     double tol = 1e-12) {
  double t = t_begin;
  double dt = std::min(1e-2, (t_end - t_begin));
  while (t < t_end) {
    if (t + dt > t_end) dt = t_end - t;
    const kinklab::State4 full = kinklab::rk4_step(s, dt, sigma, model);
    const kinklab::State4 half = kinklab::rk4_step(s, 0.5 * dt, sigma, model);
    const kinklab::State4 two_half = kinklab::rk4_step(half, 0.5 * dt, sigma, model);
    const double err = state_gap(full, two_half) / 15.0;
    const double scale = tol * (1.0 + std::abs(s.phi) + std::abs(s.dphi));
    if (err <= scale) {
      s = two_half;
      t += dt;
      if (err > 0.0) dt *= std::min(4.0, 0.9 * std::pow(scale / err, 0.2));
    } else {
      dt *= std::max(0.2, 0.9 * std::pow(scale / err, 0.2));
    }
    if (dt < 1e-12) throw std::runtime_error("ref_integrate step underflow");
  }
  return s;
}

struct RefCrossing {
  double t0;
  double K;
};

// High-accuracy crossing of phi = level along the unstable solution:
// adaptive march to a sign-change bracket, then time bisection with dense
// fixed-step re-integration from the left bracket state.
inline RefCrossing ref_crossing(double sigma, double c0, double level,
                                const kinklab::Nonlinearity& model, double tol = 1e-12,
                                double t_max = 200.0) {
  const auto rates =
      kinklab::equilibrium_rates(sigma, kinklab::eval_F_prime(model, kinklab::u_plus(model)));
  kinklab::State4 s = kinklab::unstable_ic(c0, rates.lambda0, kinklab::u_minus(model));

  double t = 0.0;
  double dt = 1e-3;
  kinklab::State4 left = s;
  double t_left = 0.0;
  bool bracketed = false;
  while (t < t_max) {
    if (s.phi - level == 0.0) return {t, s.d2phi};
    const kinklab::State4 full = kinklab::rk4_step(s, dt, sigma, model);
    const kinklab::State4 half = kinklab::rk4_step(s, 0.5 * dt, sigma, model);
    const kinklab::State4 two_half = kinklab::rk4_step(half, 0.5 * dt, sigma, model);
    const double err = state_gap(full, two_half) / 15.0;
    const double scale = tol * (1.0 + std::abs(s.phi) + std::abs(s.dphi));
    if (err <= scale) {
      if ((two_half.phi - level < 0.0) != (s.phi - level < 0.0)) {
        left = s;
        t_left = t;
        t += dt;
        bracketed = true;
        break;
      }
      s = two_half;
      t += dt;
      if (err > 0.0) dt *= std::min(4.0, 0.9 * std::pow(scale / err, 0.2));
    } else {
      dt *= std::max(0.2, 0.9 * std::pow(scale / err, 0.2));
    }
  }
  if (!bracketed) throw std::runtime_error("ref_crossing: no crossing before t_max");

  // phi at t_left + delta via fixed substeps from the bracket's left state.
  const auto eval_at = [&](double delta) {
    kinklab::State4 probe = left;
    const int substeps = 64;
    const double h = delta / substeps;
    if (h > 0.0)
      for (int i = 0; i < substeps; ++i) probe = kinklab::rk4_step(probe, h, sigma, model);
    return probe;
  };

  double lo = 0.0, hi = t - t_left;
  const double sign_left = left.phi - level < 0.0 ? -1.0 : 1.0;
  for (int i = 0; i < 100 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    const kinklab::State4 probe = eval_at(mid);
    if ((probe.phi - level) * sign_left > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const kinklab::State4 final_state = eval_at(0.5 * (lo + hi));
  return {t_left + 0.5 * (lo + hi), final_state.d2phi};
}

// ---------------------------------------------------------------------------
// Durand-Kerner root finder for monic quartics with real coefficients:
// x^4 + c3 x^3 + c2 x^2 + c1 x + c0.

inline std::array<std::complex<double>, 4> quartic_roots(double c3, double c2, double c1,
                                                         double c0) {
  using cplx = std::complex<double>;
  const auto poly = [&](cplx x) { return (((x + c3) * x + c2) * x + c1) * x + c0; };
  std::array<cplx, 4> r;
  const cplx seed(0.4, 0.9);
  r[0] = seed;
  for (int i = 1; i < 4; ++i) r[i] = r[i - 1] * seed;
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (int i = 0; i < 4; ++i) {
      cplx den(1.0, 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != i) den *= r[i] - r[j];
      const cplx delta = poly(r[i]) / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15) break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exact rationals over checked __int128 for the recurrence oracles.

using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Rat {
  int128 num = 0;
  int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(int128 n, int128 d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::overflow_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static int128 checked_mul(int128 a, int128 b) {
    int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
    return out;
  }
  static int128 checked_add(int128 a, int128 b) {
    int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
    return out;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    const int128 g = gcd128(a.den, b.den);
    const int128 bd = b.den / g;
    const int128 ad = a.den / g;
    return Rat(checked_add(checked_mul(a.num, bd), checked_mul(b.num, ad)),
               checked_mul(a.den, bd));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    const int128 g1 = gcd128(a.num, b.den);
    const int128 g2 = gcd128(b.num, a.den);
    return Rat(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("division by zero rational");
    return a * Rat(b.den, b.num);
  }
  bool is_zero() const { return num == 0; }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

inline int128 binom128(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  int128 out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out = Rat::checked_mul(out, static_cast<int128>(n - k + i));
    out /= static_cast<int128>(i);
  }
  return out;
}

// Exact weight (2l)!(2k)!(2j)!/(2n+4)! with l + k + j = n + 1.
inline Rat exact_weight(unsigned l, unsigned k, unsigned j, unsigned n) {
  const unsigned total = 2 * n + 4;
  int128 m = binom128(total, 2 * l);
  m = Rat::checked_mul(m, binom128(total - 2 * l, 2 * k));
  m = Rat::checked_mul(m, binom128(total - 2 * l - 2 * k, 2 * j));
  return Rat(1, Rat::checked_mul(2, m));
}

// Exact b_n / sqrt(2): every b is a rational multiple of sqrt(2), so the
// whole recurrence closes over the rationals.
inline std::vector<Rat> exact_beta_sequence(unsigned n_max) {
  std::vector<Rat> beta(n_max + 1);
  beta[0] = Rat(1);
  for (unsigned n = 0; n < n_max; ++n) {
    Rat expl(0);
    for (unsigned l = 0; l <= n + 1; ++l) {
      for (unsigned k = 0; l + k <= n + 1; ++k) {
        const unsigned j = n + 1 - l - k;
        if (l == n + 1 || k == n + 1 || j == n + 1) continue;
        expl = expl + exact_weight(l, k, j, n) * beta[l] * beta[k] * beta[j];
      }
    }
    // b_l b_k b_j = 2 sqrt(2) beta_l beta_k beta_j, so the explicit sum gains
    // a factor of two once the common sqrt(2) is divided out.
    const unsigned two_n = 2 * n;
    const Rat factor = Rat(1) - Rat(6, static_cast<int128>(two_n + 4) * (two_n + 3));
    beta[n + 1] = (beta[n] + Rat(2) * expl) / factor;
  }
  return beta;
}

}  // namespace oracle
