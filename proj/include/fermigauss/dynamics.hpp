#pragma once

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

// One-particle entangling Hamiltonian on shape (n, n): a Hermitian
// reflection (H^2 = 1) that anticommutes with the conjugation and swaps the
// occupied product state with its complement.  4-block pattern
//   (0 0 0 1; 0 0 -1 0; 0 -1 0 0; 1 0 0 0).
Matrix entangler_hamiltonian(int n);

// exp(itH) = cos(t) 1 + i sin(t) H wrapped as a (global) Bogolubov
// transform; h must be the 4n x 4n entangler.
BogolubovTransform evolution_unitary(const Matrix& h, double t);

// Evolves a covariance as E_t = exp(-itH) E exp(itH) in closed form,
//   E_t = cos^2(t) E + sin^2(t) (1 - E) + i sin(t) cos(t) [E, H].
// Requires the reflection identity H E H = 1 - E within eps.
CovarianceMatrix evolve(const CovarianceMatrix& initial, double t, double eps = kDefaultEps);

}  // namespace fermigauss
