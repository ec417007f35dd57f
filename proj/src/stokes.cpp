#include "kinklab/stokes.hpp"

#include <cmath>
#include <stdexcept>

namespace kinklab {

namespace {

// Walks the weight (2l)!(2k)!(2j)!/(2n+4)! with j = n+1-l-k across the (l, k)
// triangle by incremental ratio updates; no factorial is ever materialized.
class WeightWalker {
 public:
  explicit WeightWalker(std::size_t n) : n_(n) {}

  // weight at (l, 0), advancing from (l-1, 0)
  double start_row(std::size_t l) {
    if (l == 0) {
      const double two_n = 2.0 * static_cast<double>(n_);
      row_ = 1.0 / ((two_n + 3.0) * (two_n + 4.0));
    } else {
      // l-1 -> l while j = n+1-(l-1) -> n-l+1
      const double lf = static_cast<double>(l);
      const double jf = static_cast<double>(n_ + 2 - l);
      row_ *= (2.0 * lf - 1.0) * (2.0 * lf) / ((2.0 * jf - 1.0) * (2.0 * jf));
    }
    cur_ = row_;
    return cur_;
  }

  // weight at (l, k+1), advancing from (l, k); j is the index before the move
  double advance_k(std::size_t k, std::size_t j) {
    const double kf = static_cast<double>(k);
    const double jf = static_cast<double>(j);
    cur_ *= (2.0 * kf + 1.0) * (2.0 * kf + 2.0) / ((2.0 * jf - 1.0) * (2.0 * jf));
    return cur_;
  }

 private:
  std::size_t n_;
  double row_ = 0.0;
  double cur_ = 0.0;
};

}  // namespace

StokesSequence b_sequence(std::size_t n_max) {
  StokesSequence seq;
  seq.b.resize(n_max + 1);
  seq.b[0] = std::sqrt(2.0);

  for (std::size_t n = 0; n < n_max; ++n) {
    // Explicit part: all (l, k, j) with l+k+j = n+1 and every index <= n.
    // The three combinations containing index n+1 are exactly those with the
    // other two indices zero; they form the implicit left-hand side.
    double expl = 0.0;
    WeightWalker walker(n);
    for (std::size_t l = 0; l <= n + 1; ++l) {
      double w = walker.start_row(l);
      for (std::size_t k = 0; l + k <= n + 1; ++k) {
        const std::size_t j = n + 1 - l - k;
        if (k > 0) w = walker.advance_k(k - 1, j + 1);
        if (l == n + 1 || k == n + 1 || j == n + 1) continue;
        expl += w * seq.b[l] * seq.b[k] * seq.b[j];
      }
    }
    const double two_n = 2.0 * static_cast<double>(n);
    const double factor = 1.0 - 6.0 / ((two_n + 4.0) * (two_n + 3.0));
    seq.b[n + 1] = (seq.b[n] + expl) / factor;
  }
  return seq;
}

double a_from_b(const StokesSequence& seq, std::size_t m) {
  if (m < 1) throw std::out_of_range("a_from_b requires m >= 1");
  if (m % 2 == 0) return 0.0;
  const std::size_t n = (m - 1) / 2;
  if (n >= seq.b.size()) throw std::out_of_range("a_from_b: sequence too short for m");
  double fact = 1.0;  // (2n)!
  for (std::size_t i = 2; i <= 2 * n; ++i) fact *= static_cast<double>(i);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * fact * seq.b[n];
}

double verify_a_recurrence(const StokesSequence& seq, std::size_t m_max) {
  if (seq.b.empty() || m_max < 1)
    throw std::invalid_argument("verify_a_recurrence: need m_max >= 1 and a sequence");
  if (std::abs(seq.b[0] - std::sqrt(2.0)) > 1e-12)
    throw std::invalid_argument("verify_a_recurrence: sequence must be anchored at sqrt(2)");
  if (m_max + 3 > 2 * seq.n_max() + 1)
    throw std::out_of_range("verify_a_recurrence: m_max too large for the sequence");

  double worst = 0.0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const double mf = static_cast<double>(m);
    const double lead = mf * (mf + 1.0) * (mf + 2.0) * (mf + 3.0) * a_from_b(seq, m);
    const double sub = (mf + 2.0) * (mf + 3.0) * a_from_b(seq, m + 2);
    double cubic = 0.0;
    double magnitude = std::abs(lead) + std::abs(sub);
    for (std::size_t l = 1; l + 1 <= m + 3; ++l) {
      for (std::size_t k = 1; l + k <= m + 3; ++k) {
        const std::size_t j = m + 4 - l - k;
        const double term = a_from_b(seq, l) * a_from_b(seq, k) * a_from_b(seq, j);
        cubic += term;
        magnitude += std::abs(term);
      }
    }
    if (magnitude == 0.0) continue;  // even m: every term vanishes identically
    const double residual = std::abs(lead + sub - cubic) / magnitude;
    worst = std::max(worst, residual);
  }
  return worst;
}

}  // namespace kinklab
