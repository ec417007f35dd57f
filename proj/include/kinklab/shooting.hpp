#pragma once

#include <utility>
#include <vector>

#include "kinklab/integrator.hpp"
#include "kinklab/model.hpp"

namespace kinklab {

// One split-function evaluation: shoot along the unstable manifold of u_minus
// until phi first crosses `level`.
struct ShootingConfig {
  double sigma = 5.0;
  double c0 = 1e-5;
  double dt = 0.005;
  double level = 0.0;   // 0 single kink, pi / 2pi sine-Gordon multi-kinks
  double t_max = 200.0;
};

enum class ShotStatus { Ok, NoCrossing, BlowUp };

struct SplitResult {
  double t0 = 0.0;   // first crossing time
  double K = 0.0;    // phi''(t0), the split function value
  long steps = 0;    // RK4 steps taken
  ShotStatus status = ShotStatus::Ok;
};

struct ScanRow {
  double sigma;
  double t0;  // nan when the shot failed
  double K;   // nan when the shot failed
};

struct ZeroRecord {
  double sigma_star;
  double bracket_lo;
  double bracket_hi;
  double K_residual;
};

struct SensitivityResult {
  double mean;
  double std_dev;
  double rel_error;  // std_dev / |mean|
};

// Never throws for NoCrossing/BlowUp; reports through `status` instead.
SplitResult integrate_to_crossing(const ShootingConfig& cfg, const Nonlinearity& model);

// Thin wrapper returning K; throws no_crossing_error / blow_up_error.
double split_K(double sigma, double c0, double dt, double level, const Nonlinearity& model,
               double t_max = 200.0);

// One row per sigma, in grid order regardless of thread count; failed shots
// yield nan entries.
std::vector<ScanRow> scan(const std::vector<double>& sigma_grid, double c0, double dt,
                          double level, const Nonlinearity& model, int threads = 1,
                          double t_max = 200.0);

// Sign-change brackets of K on [lo, hi] sampled with `step`, bisected to a
// sigma interval below 1e-8 and polished until |K| is at the noise floor.
std::vector<ZeroRecord> find_sigma_zeros(double lo, double hi, double step, double c0,
                                         double dt, double level, const Nonlinearity& model,
                                         int threads = 1);

SensitivityResult c0_sensitivity(double sigma, double dt, const std::vector<double>& c0_list,
                                 double level, const Nonlinearity& model);

std::vector<std::pair<double, double>> dt_convergence(double sigma, double c0,
                                                      const std::vector<double>& dt_list,
                                                      double level,
                                                      const Nonlinearity& model);

}  // namespace kinklab
