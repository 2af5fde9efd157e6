#pragma once

#include <vector>

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

// Pairing enumeration is capped at 6 pairs (12 field operators, 10395 terms).
inline constexpr int kMaxWickPairs = 6;

// A perfect pairing of positions 0..2k-1 written as the flat sequence
// (q0, q1 | q2, q3 | ...): consecutive entries form the pairs, the pair
// leaders increase left to right and each leader precedes its partner.
// sign is the parity of the sequence read as a permutation.
struct Pairing {
  std::vector<int> order;
  int sign = 1;
};

std::vector<Pairing> enumerate_pairings(int pairs, int max_pairs = kMaxWickPairs);

// tr(rho_S B(f) B(g)) = <Gamma f, S g>
Complex two_point(const CovarianceMatrix& s, const Vector& f, const Vector& g);

// Signed sum over pairings of two-point functions; the quasifree expectation
// tr(rho_S B(f_1) ... B(f_m)).  Odd m gives exactly zero.
Complex wick_expectation(const CovarianceMatrix& s, const std::vector<Vector>& fields,
                         int max_pairs = kMaxWickPairs);

// Same sum with the pair values taken from a precomputed kernel
// K(a, b) = tr(rho B_a B_b); idx selects the operators in order.
Complex wick_from_kernel(const Matrix& kernel, const std::vector<int>& idx,
                         int max_pairs = kMaxWickPairs);

// Whether the expectation in the covariance-1/2 state is unchanged when the
// last field operator is cycled to the front.
bool cyclic_trace_check(const SystemShape& shape, const std::vector<Vector>& fields,
                        double eps = kDefaultEps);

}  // namespace fermigauss
