#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

// Hard cap on total modes for the dense oracle (matrix dimension 2^12).
inline constexpr int kFockModeCap = 12;

// Eigenvalues below this count as null when extracting a common kernel.
inline constexpr double kNullThreshold = 1e-10;

// Dense occupation-number representation.  Basis states are binary strings
// with mode 0 as the most significant bit; creators act with the sign
// (-1)^(number of occupied modes before j).  Alice modes come first, so
// operators factor over H_A (x) H_B with Bob operators carrying the Alice
// parity string.  The slow, trusted path: everything is an explicit matrix.
class FockSpace {
 public:
  explicit FockSpace(SystemShape shape);

  const SystemShape& shape() const { return shape_; }
  int modes() const { return shape_.modes(); }
  long dimension() const { return dim_; }

  const Matrix& annihilator(int mode) const;
  const Matrix& creator(int mode) const;

  // B(f) = sum_u f(+, u) c_u + f(-, u) c_u^dag for a one-particle vector f
  // on the shape.
  Matrix field_operator(const Vector& f) const;

  // Component basis operator: c_u for a "+" component, c_u^dag for a "-".
  const Matrix& component_operator(int comp) const;

  Vector vacuum_vector() const;

  // Diagonal parity operators (-1)^N over all, Alice, or Bob modes.
  Matrix parity_global() const;
  Matrix parity_alice() const;
  Matrix parity_bob() const;

  bool alice_bit(long basis_index, int mode) const;

 private:
  SystemShape shape_;
  long dim_ = 0;
  // Mode operators materialize on first use; a full 12-mode set would not
  // fit in memory as dense matrices.
  mutable std::vector<Matrix> c_, cdag_;
};

// Unique unit vector annihilated by B(f) for every f in ker(P), phase fixed
// by making the largest-magnitude amplitude real positive.  P must be a
// validated basis projection; a common kernel of dimension != 1 raises an
// invariant error.
Vector vacuum_of_projection(const CovarianceMatrix& p, double eps = kDefaultEps);

// S_ij = tr(rho B(Gamma e_i) B(e_j)) for the component basis.
CovarianceMatrix covariance_from_density(const SystemShape& shape, const Matrix& rho);

// Quasifree density operator with the given covariance, reconstructed by
// expanding in the orthogonal basis of Majorana monomials with coefficients
// from the Wick sum.  Capped at 6 total modes (12 Majorana generators).
Matrix density_from_covariance(const CovarianceMatrix& s);

struct ParityBlock {
  int alice_parity = +1;  // +1 even, -1 odd
  int bob_parity = +1;
  double probability = 0.0;
  Matrix state;  // normalized block on H_a (x) H_b; zero when unoccupied
};

struct ParityBlockDecomposition {
  int n = 0;          // modes per party
  long block_dim = 0;  // 2^(n-1) per factor
  std::array<ParityBlock, 4> blocks;  // order (++), (+-), (-+), (--)

  double probability(int alice_parity, int bob_parity) const;
  // min(p_++ + p_--, p_+- + p_-+): zero exactly when the support sits in
  // only the equal-parity or only the opposite-parity pair of blocks.
  double support_dichotomy_deviation() const;
};

// Splits a density operator along the joint +-1 eigenspaces of the two
// local parities.  Requires n_alice == n_bob >= 1.
ParityBlockDecomposition parity_blocks(const SystemShape& shape, const Matrix& rho);

struct BlockMaximality {
  int alice_parity = +1;
  int bob_parity = +1;
  double probability = 0.0;
  double purity_deviation = 0.0;    // max |sigma^2 - sigma|
  double reduced_deviation = 0.0;   // max |tr_B sigma - 1/d|
  double entropy_bits = 0.0;
};

struct BlockMaximalityReport {
  bool maximal = false;
  bool degenerate = false;  // n = 1: one-dimensional blocks, zero entropy
  std::vector<BlockMaximality> blocks;  // occupied blocks only
};

// Definition of maximal entanglement at the Fock level: every occupied
// parity block is pure with a maximally mixed reduction.
BlockMaximalityReport check_block_maximality(const SystemShape& shape, const Matrix& rho,
                                             double eps = kDefaultEps);

// Entanglement of formation of the parity-block decomposition in bits:
// sum_ab p_ab S(tr_B sigma_ab).  Every occupied block must be pure.
double entanglement_of_formation(const SystemShape& shape, const Matrix& rho,
                                 double eps = kDefaultEps);

// max entry of  B(f) - [ B(f_A) (x) 1 + Theta_A (x) B(f_B) ]:
// the untwisting of a field operator into tensor form.
double untwist_field_deviation(const SystemShape& shape, const Vector& f);

// Deviation of a product (Alice monomial) * (Bob monomial) from its tensor
// form: A (x) B for an even Bob monomial, A Theta_A (x) B for an odd one.
// Field vectors are single-party (lengths 2 n_alice and 2 n_bob).
double untwist_monomial_deviation(const SystemShape& shape,
                                  const std::vector<Vector>& alice_fields,
                                  const std::vector<Vector>& bob_fields);

// Second-quantized entangler sum_j c_j c_{n+j} + c_{n+j}^dag c_j^dag,
// satisfying [H, B(f)] = B(H_1 f) for the one-particle entangler H_1.
Matrix second_quantized_entangler(int n);

struct TraceStateReport {
  // tr(T B(f) B(g)) = 1/2 <Gamma f, g> over the four parity mixtures
  // T = 2^(1-n) (p E_+ + (1-p) E_-), p in {0, 1/4, 1/2, 1}.
  double pair_identity_deviation = 0.0;
  // tr(Theta c_i^dag c_j) = 0
  double parity_two_point_deviation = 0.0;
  // density of covariance 1/2 equals 2^(-n) identity
  double trace_density_deviation = 0.0;
  // [H, B(f)] = B(H_1 f) on shape (n, n)
  double heisenberg_deviation = 0.0;

  double worst() const;
};

// Numerical checks of the trace-state identities on n single-party modes.
TraceStateReport trace_state_report(int n, int samples, std::mt19937_64& rng);

double von_neumann_entropy_bits(const Matrix& rho);

Matrix partial_trace_bob(const Matrix& rho, long dim_a, long dim_b);

}  // namespace fermigauss
