#pragma once

#include <cstddef>
#include <vector>

namespace kinklab {

// Diagonal coefficients b_n of the inverse-power-series recurrence; b[0] = sqrt(2)
// and the sequence is increasing, which is what makes the Stokes constant
// strictly positive.
struct StokesSequence {
  std::vector<double> b;
  std::size_t n_max() const { return b.size() - 1; }
};

// Builds b_0..b_n_max. The recurrence is implicit in b_{n+1}: the three terms
// of the cubic sum with index n+1 are collected on the left, leaving
// b_{n+1} (1 - 6/((2n+4)(2n+3))) = b_n + explicit terms.
StokesSequence b_sequence(std::size_t n_max);

// a_m = (-1)^n (2n)! b_n for odd m = 2n+1, and 0 for even m >= 2.
double a_from_b(const StokesSequence& seq, std::size_t m);

// Max over m <= m_max of the scaled residual of
// m(m+1)(m+2)(m+3) a_m + (m+2)(m+3) a_{m+2} - sum_{l+k<=m+3} a_l a_k a_{m+4-l-k},
// each residual divided by the sum of its term magnitudes.
double verify_a_recurrence(const StokesSequence& seq, std::size_t m_max);

}  // namespace kinklab
