#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kinklab/csv.hpp"
#include "kinklab/dispersion.hpp"
#include "kinklab/errors.hpp"
#include "kinklab/inverse.hpp"
#include "kinklab/lattice.hpp"
#include "kinklab/model.hpp"
#include "kinklab/shooting.hpp"
#include "kinklab/stokes.hpp"

namespace {

using kinklab::csv::fmt;

struct ModelFlags {
  std::string name = "phi4";
  double alpha = 0.0;
  double beta = 0.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--model", flags.name, "Nonlinearity: phi4, sine-gordon, inverse")
      ->capture_default_str()
      ->check(CLI::IsMember({"phi4", "sine-gordon", "inverse"}));
  cmd->add_option("--alpha", flags.alpha, "Inverse-model alpha")->capture_default_str();
  cmd->add_option("--beta", flags.beta, "Inverse-model beta, in (0,1)")->capture_default_str();
}

kinklab::Nonlinearity build_model(const ModelFlags& flags) {
  if (flags.name == "phi4") return kinklab::Nonlinearity::phi4();
  if (flags.name == "sine-gordon") return kinklab::Nonlinearity::sine_gordon();
  return kinklab::Nonlinearity::inverse(flags.alpha, flags.beta);
}

// Accepts "zero", "pi", "2pi" or a plain number.
double parse_level(const std::string& text) {
  if (text == "zero") return 0.0;
  if (text == "pi") return std::numbers::pi;
  if (text == "2pi") return 2.0 * std::numbers::pi;
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad --level value: " + text);
  return value;
}

std::vector<double> sigma_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sigma step must be > 0");
  if (!(hi >= lo)) throw std::invalid_argument("sigma range must be nonempty");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double x = lo + step * static_cast<double>(i);
    if (x > hi + 0.5 * step) break;
    grid.push_back(std::min(x, hi));
  }
  return grid;
}

int emit(const std::string& out_path, const std::vector<std::string>& header,
         const std::vector<std::vector<std::string>>& rows) {
  if (out_path.empty()) {
    kinklab::csv::write(std::cout, header, rows);
    return std::cout.good() ? 0 : 2;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  kinklab::csv::write(out, header, rows);
  return out.good() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Travelling-kink analysis for discrete Klein-Gordon lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // --out may follow the subcommand

  std::string out_path;
  app.add_option("--out", out_path, "Output CSV path (default: stdout)")
      ->capture_default_str();

  // scan-k
  auto* scan_cmd = app.add_subcommand("scan-k", "Tabulate the split function K over sigma");
  ModelFlags scan_model;
  double scan_lo = 2.5, scan_hi = 8.0, scan_step = 0.1;
  double scan_c0 = 1e-5, scan_dt = 0.005, scan_tmax = 200.0;
  std::string scan_level = "zero";
  int scan_threads = 1;
  add_model_flags(scan_cmd, scan_model);
  scan_cmd->add_option("--sigma-min", scan_lo)->capture_default_str();
  scan_cmd->add_option("--sigma-max", scan_hi)->capture_default_str();
  scan_cmd->add_option("--sigma-step", scan_step)->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--c0", scan_c0, "Unstable-manifold offset")->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--dt", scan_dt, "RK4 step")->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--level", scan_level, "Crossing level: zero, pi, 2pi or a number")
      ->capture_default_str();
  scan_cmd->add_option("--t-max", scan_tmax)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--threads", scan_threads)->capture_default_str()
      ->check(CLI::PositiveNumber);

  // find-kinks
  auto* find_cmd = app.add_subcommand("find-kinks", "Bisect sign changes of K(sigma)");
  ModelFlags find_model;
  double find_lo = 2.0, find_hi = 12.0, find_step = 0.05;
  double find_c0 = 1e-5, find_dt = 0.005;
  std::string find_level = "pi";
  int find_threads = 1;
  add_model_flags(find_cmd, find_model);
  find_cmd->add_option("--sigma-min", find_lo)->capture_default_str();
  find_cmd->add_option("--sigma-max", find_hi)->capture_default_str();
  find_cmd->add_option("--step", find_step)->capture_default_str()->check(CLI::PositiveNumber);
  find_cmd->add_option("--c0", find_c0)->capture_default_str()->check(CLI::PositiveNumber);
  find_cmd->add_option("--dt", find_dt)->capture_default_str()->check(CLI::PositiveNumber);
  find_cmd->add_option("--level", find_level)->capture_default_str();
  find_cmd->add_option("--threads", find_threads)->capture_default_str()
      ->check(CLI::PositiveNumber);

  // bifurcation
  auto* bif_cmd = app.add_subcommand("bifurcation", "Sample the 1:1-resonance curve h*(c)");
  double bif_pmin = 0.01, bif_pmax = 1.55;
  std::size_t bif_count = 100;
  bif_cmd->add_option("--p-min", bif_pmin)->capture_default_str();
  bif_cmd->add_option("--p-max", bif_pmax)->capture_default_str();
  bif_cmd->add_option("--count", bif_count)->capture_default_str()
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));

  // quartic
  auto* quartic_cmd = app.add_subcommand("quartic", "Classify the bi-quadratic eigenvalues");
  double q_gamma = -1.0, q_tau = 1.0;
  quartic_cmd->add_option("--gamma", q_gamma)->capture_default_str();
  quartic_cmd->add_option("--tau", q_tau)->capture_default_str();

  // dispersion-roots
  auto* disp_cmd = app.add_subcommand("dispersion-roots",
                                      "Imaginary-axis roots of the dispersion relation");
  disp_cmd->set_help_flag("--help", "Print help");  // frees -h for the step size
  double d_c = 0.0, d_h = 1.0, d_kmax = 7.0;
  disp_cmd->add_option("--c", d_c)->capture_default_str()->check(CLI::NonNegativeNumber);
  disp_cmd->add_option("--h", d_h)->capture_default_str()->check(CLI::NonNegativeNumber);
  disp_cmd->add_option("--k-max", d_kmax)->capture_default_str()->check(CLI::PositiveNumber);

  // stokes
  auto* stokes_cmd = app.add_subcommand("stokes", "Diagonal recurrence coefficients b_n");
  std::size_t stokes_n = 100;
  stokes_cmd->add_option("--n", stokes_n)->capture_default_str();

  // inverse-verify
  auto* inv_cmd = app.add_subcommand(
      "inverse-verify", "Exact-kink identities of the inverse-method nonlinearity");
  double inv_s = 0.8, inv_mu = 0.5, inv_gamma_s = 0.0, inv_tau = 0.0;
  double inv_zmin = -10.0, inv_zmax = 10.0;
  std::size_t inv_points = 401;
  auto* opt_s = inv_cmd->add_option("--s", inv_s, "Kink speed")->capture_default_str();
  inv_cmd->add_option("--mu", inv_mu, "Kink steepness")->capture_default_str();
  auto* opt_gs = inv_cmd->add_option("--gamma-s", inv_gamma_s,
                                     "Check the normal-form kink at (gamma_s, tau) instead");
  inv_cmd->add_option("--tau", inv_tau)->needs(opt_gs);
  inv_cmd->add_option("--z-min", inv_zmin)->capture_default_str();
  inv_cmd->add_option("--z-max", inv_zmax)->capture_default_str();
  inv_cmd->add_option("--points", inv_points)->capture_default_str()
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(10000000)));
  opt_gs->excludes(opt_s);

  // lattice-sim
  auto* lat_cmd = app.add_subcommand("lattice-sim", "Propagate the exact kink on the lattice");
  double lat_s = 0.8, lat_mu = 0.5, lat_tfinal = -1.0, lat_dt = -1.0;
  std::size_t lat_sites = 400, lat_checkpoints = 10;
  lat_cmd->add_option("--s", lat_s)->capture_default_str()->check(CLI::PositiveNumber);
  lat_cmd->add_option("--mu", lat_mu)->capture_default_str()->check(CLI::PositiveNumber);
  lat_cmd->add_option("--t-final", lat_tfinal, "Default: 10 h / s");
  lat_cmd->add_option("--dt", lat_dt, "Default: h / 50");
  lat_cmd->add_option("--sites", lat_sites)->capture_default_str();
  lat_cmd->add_option("--checkpoints", lat_checkpoints)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*scan_cmd) {
      const auto model = build_model(scan_model);
      const double level = parse_level(scan_level);
      const auto grid = sigma_grid(scan_lo, scan_hi, scan_step);
      const auto rows =
          kinklab::scan(grid, scan_c0, scan_dt, level, model, scan_threads, scan_tmax);
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& r : rows) cells.push_back({fmt(r.sigma), fmt(r.t0), fmt(r.K)});
      return emit(out_path, {"sigma", "t0", "K"}, cells);
    }

    if (*find_cmd) {
      const auto model = build_model(find_model);
      const double level = parse_level(find_level);
      const auto zeros = kinklab::find_sigma_zeros(find_lo, find_hi, find_step, find_c0,
                                                   find_dt, level, model, find_threads);
      std::vector<std::vector<std::string>> cells;
      for (const auto& z : zeros)
        cells.push_back({fmt(z.sigma_star), fmt(z.bracket_lo), fmt(z.bracket_hi),
                         fmt(z.K_residual)});
      return emit(out_path, {"sigma_star", "bracket_lo", "bracket_hi", "K_residual"}, cells);
    }

    if (*bif_cmd) {
      std::vector<std::vector<std::string>> cells;
      const auto ps = kinklab::linspace(bif_pmin, bif_pmax, bif_count);
      for (double P : ps) {
        const auto point = kinklab::bifurcation_point(P);
        cells.push_back({fmt(point.P), fmt(point.c), fmt(point.h)});
      }
      return emit(out_path, {"P", "c", "h"}, cells);
    }

    if (*quartic_cmd) {
      const auto qc = kinklab::classify_quartic(q_gamma, q_tau);
      std::vector<std::string> row{fmt(q_gamma), fmt(q_tau), kinklab::to_string(qc.label)};
      for (const auto& root : qc.roots) {
        row.push_back(fmt(root.real()));
        row.push_back(fmt(root.imag()));
      }
      return emit(out_path,
                  {"gamma", "tau", "label", "re1", "im1", "re2", "im2", "re3", "im3", "re4",
                   "im4"},
                  {row});
    }

    if (*disp_cmd) {
      const auto roots = kinklab::imaginary_roots(d_c, d_h, d_kmax);
      std::vector<std::vector<std::string>> cells;
      for (double K : roots) {
        const auto residual = kinklab::eval_D(std::complex<double>(0.0, 2.0 * K), d_c, d_h);
        cells.push_back({fmt(K), fmt(std::abs(residual))});
      }
      return emit(out_path, {"K", "abs_D"}, cells);
    }

    if (*stokes_cmd) {
      const auto seq = kinklab::b_sequence(stokes_n);
      std::vector<std::vector<std::string>> cells;
      for (std::size_t n = 0; n < seq.b.size(); ++n)
        cells.push_back({fmt(static_cast<long>(n)), fmt(seq.b[n])});
      return emit(out_path, {"n", "b_n"}, cells);
    }

    if (*inv_cmd) {
      const auto grid = kinklab::linspace(inv_zmin, inv_zmax, inv_points);
      if (*opt_gs) {
        const auto roots = kinklab::mu_s_roots(inv_gamma_s, inv_tau);
        std::vector<std::vector<std::string>> cells;
        for (double root : roots) {
          const double residual =
              kinklab::normalform_residual(inv_gamma_s, inv_tau, root, grid);
          cells.push_back({fmt(inv_gamma_s), fmt(inv_tau), fmt(root), fmt(residual)});
        }
        return emit(out_path, {"gamma_s", "tau", "mu_s", "normalform_residual"}, cells);
      }
      const auto params = kinklab::inverse_params(inv_s, inv_mu);
      const double residual = kinklab::advance_delay_residual(inv_s, inv_mu, grid);
      return emit(out_path, {"s", "mu", "alpha", "beta", "h2", "max_residual"},
                  {{fmt(params.s), fmt(params.mu), fmt(params.alpha), fmt(params.beta),
                    fmt(params.h2), fmt(residual)}});
    }

    if (*lat_cmd) {
      const auto params = kinklab::inverse_params(lat_s, lat_mu);
      const double h = std::sqrt(params.h2);
      const double t_final = lat_tfinal > 0.0 ? lat_tfinal : 10.0 * h / lat_s;
      const double dt = lat_dt > 0.0 ? lat_dt : h / 50.0;
      const double err = kinklab::simulate_exact_kink(lat_s, lat_mu, t_final, dt, lat_sites,
                                                      lat_checkpoints);
      return emit(out_path, {"s", "mu", "h", "t_final", "dt", "sites", "linf_error"},
                  {{fmt(lat_s), fmt(lat_mu), fmt(h), fmt(t_final), fmt(dt),
                    fmt(static_cast<long>(lat_sites)), fmt(err)}});
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
