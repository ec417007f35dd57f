#include "kinklab/shooting.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kinklab/errors.hpp"

namespace kinklab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Cubic Hermite on a unit interval; m0, m1 are derivatives already scaled by dt.
double hermite(double xi, double f0, double m0, double f1, double m1) {
  const double xi2 = xi * xi;
  const double xi3 = xi2 * xi;
  return (2.0 * xi3 - 3.0 * xi2 + 1.0) * f0 + (xi3 - 2.0 * xi2 + xi) * m0 +
         (-2.0 * xi3 + 3.0 * xi2) * f1 + (xi3 - xi2) * m1;
}

// Root of the Hermite interpolant of phi - level on the bracketing step,
// assuming a sign change between the endpoints.
double hermite_root(double f0, double m0, double f1, double m1) {
  double a = 0.0, b = 1.0;
  double fa = f0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = hermite(mid, f0, m0, f1, m1);
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

void validate(const ShootingConfig& cfg, const Nonlinearity& model) {
  if (!(cfg.c0 > 0.0 && cfg.c0 < 1e-2))
    throw std::invalid_argument("shooting requires 0 < c0 < 1e-2");
  if (!(cfg.dt > 0.0 && cfg.dt <= 0.05))
    throw std::invalid_argument("shooting requires 0 < dt <= 0.05");
  if (!(cfg.t_max > 0.0)) throw std::invalid_argument("shooting requires t_max > 0");
  if (!(cfg.level > u_minus(model)))
    throw std::invalid_argument("crossing level must lie above u_minus");
}

template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SplitResult integrate_to_crossing(const ShootingConfig& cfg, const Nonlinearity& model) {
  validate(cfg, model);

  const double base = u_minus(model);
  const EquilibriumRates rates =
      equilibrium_rates(cfg.sigma, eval_F_prime(model, u_plus(model)));
  State4 s = unstable_ic(cfg.c0, rates.lambda0, base);

  double g_prev = s.phi - cfg.level;
  if (g_prev == 0.0) return {0.0, s.d2phi, 0, ShotStatus::Ok};

  const long n_max = static_cast<long>(std::ceil(cfg.t_max / cfg.dt));
  for (long i = 1; i <= n_max; ++i) {
    State4 next;
    try {
      next = rk4_step(s, cfg.dt, cfg.sigma, model);
    } catch (const blow_up_error&) {
      return {0.0, 0.0, i, ShotStatus::BlowUp};
    }
    const double g = next.phi - cfg.level;
    if (g == 0.0) return {static_cast<double>(i) * cfg.dt, next.d2phi, i, ShotStatus::Ok};
    if ((g < 0.0) != (g_prev < 0.0)) {
      const double xi = hermite_root(g_prev, cfg.dt * s.dphi, g, cfg.dt * next.dphi);
      const double t0 = (static_cast<double>(i - 1) + xi) * cfg.dt;
      const double K = hermite(xi, s.d2phi, cfg.dt * s.d3phi, next.d2phi, cfg.dt * next.d3phi);
      return {t0, K, i, ShotStatus::Ok};
    }
    s = next;
    g_prev = g;
  }
  return {0.0, 0.0, n_max, ShotStatus::NoCrossing};
}

double split_K(double sigma, double c0, double dt, double level, const Nonlinearity& model,
               double t_max) {
  const SplitResult r = integrate_to_crossing({sigma, c0, dt, level, t_max}, model);
  if (r.status == ShotStatus::NoCrossing)
    throw no_crossing_error("no crossing of the level within t_max");
  if (r.status == ShotStatus::BlowUp)
    throw blow_up_error("trajectory diverged before crossing the level");
  return r.K;
}

std::vector<ScanRow> scan(const std::vector<double>& sigma_grid, double c0, double dt,
                          double level, const Nonlinearity& model, int threads,
                          double t_max) {
  std::vector<ScanRow> rows(sigma_grid.size());
  parallel_for(sigma_grid.size(), threads, [&](std::size_t i) {
    const SplitResult r = integrate_to_crossing({sigma_grid[i], c0, dt, level, t_max}, model);
    if (r.status == ShotStatus::Ok)
      rows[i] = {sigma_grid[i], r.t0, r.K};
    else
      rows[i] = {sigma_grid[i], kNan, kNan};
  });
  return rows;
}

std::vector<ZeroRecord> find_sigma_zeros(double lo, double hi, double step, double c0,
                                         double dt, double level, const Nonlinearity& model,
                                         int threads) {
  if (!(step > 0.0)) throw std::invalid_argument("find_sigma_zeros requires step > 0");
  if (!(hi > lo)) throw std::invalid_argument("find_sigma_zeros requires hi > lo");

  std::vector<double> grid;
  for (double x = lo; x < hi + 0.5 * step; x += step) grid.push_back(std::min(x, hi));
  const std::vector<ScanRow> rows = scan(grid, c0, dt, level, model, threads);

  const auto eval = [&](double sigma) -> double {
    const SplitResult r = integrate_to_crossing({sigma, c0, dt, level, 200.0}, model);
    return r.status == ShotStatus::Ok ? r.K : kNan;
  };

  std::vector<ZeroRecord> zeros;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double Ka0 = rows[i].K;
    const double Kb0 = rows[i + 1].K;
    if (!std::isfinite(Ka0) || !std::isfinite(Kb0)) continue;
    if (Ka0 == 0.0) {
      zeros.push_back({rows[i].sigma, rows[i].sigma, rows[i].sigma, 0.0});
      continue;
    }
    if ((Ka0 < 0.0) == (Kb0 < 0.0)) continue;

    double a = rows[i].sigma, b = rows[i + 1].sigma;
    double Ka = Ka0, Kb = Kb0;
    double best_sigma = std::abs(Ka) < std::abs(Kb) ? a : b;
    double best_K = std::abs(Ka) < std::abs(Kb) ? Ka : Kb;
    // Bisect the sigma interval below 1e-8, then keep halving until the
    // residual hits the discretization noise floor.
    for (int it = 0; it < 80; ++it) {
      const bool narrow = (b - a) < 1e-8;
      if (narrow && std::abs(best_K) < 1e-11) break;
      if ((b - a) < 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b)))
        break;
      const double mid = 0.5 * (a + b);
      const double Km = eval(mid);
      if (!std::isfinite(Km)) break;
      if (std::abs(Km) < std::abs(best_K)) {
        best_K = Km;
        best_sigma = mid;
      }
      if (Km == 0.0) {
        a = b = mid;
        break;
      }
      if ((Km < 0.0) == (Ka < 0.0)) {
        a = mid;
        Ka = Km;
      } else {
        b = mid;
        Kb = Km;
      }
    }
    // A sign change that does not bisect to a vanishing K is a tangency of
    // the first-crossing map (t0 jumps, K flips sign through a discontinuity),
    // not a heteroclinic connection; those brackets are discarded.
    if (std::abs(best_K) < 1e-10) zeros.push_back({best_sigma, a, b, best_K});
  }
  return zeros;
}

SensitivityResult c0_sensitivity(double sigma, double dt, const std::vector<double>& c0_list,
                                 double level, const Nonlinearity& model) {
  if (c0_list.size() < 2)
    throw std::invalid_argument("c0_sensitivity requires at least two c0 values");
  std::vector<double> ks;
  ks.reserve(c0_list.size());
  for (double c0 : c0_list) ks.push_back(split_K(sigma, c0, dt, level, model));

  double mean = 0.0;
  for (double k : ks) mean += k;
  mean /= static_cast<double>(ks.size());
  double var = 0.0;
  for (double k : ks) var += (k - mean) * (k - mean);
  const double std_dev = std::sqrt(var / static_cast<double>(ks.size()));
  return {mean, std_dev, mean == 0.0 ? std::numeric_limits<double>::infinity()
                                     : std_dev / std::abs(mean)};
}

std::vector<std::pair<double, double>> dt_convergence(double sigma, double c0,
                                                      const std::vector<double>& dt_list,
                                                      double level,
                                                      const Nonlinearity& model) {
  if (dt_list.empty()) throw std::invalid_argument("dt_convergence requires dt values");
  for (std::size_t i = 0; i + 1 < dt_list.size(); ++i)
    if (!(dt_list[i] > dt_list[i + 1]))
      throw std::invalid_argument("dt_convergence requires a strictly decreasing dt list");
  std::vector<std::pair<double, double>> out;
  out.reserve(dt_list.size());
  for (double dt : dt_list) out.emplace_back(dt, split_K(sigma, c0, dt, level, model));
  return out;
}

}  // namespace kinklab
