#pragma once

#include <cstdint>
#include <random>

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

using Rng = std::mt19937_64;

// Standard complex Gaussian entries.
Vector random_field(const SystemShape& shape, Rng& rng);
Matrix random_gaussian(int rows, int cols, Rng& rng);
RealMatrix random_antisymmetric(int dim, Rng& rng);

// Haar unitary via QR of a complex Gaussian with phase-fixed R diagonal.
Matrix random_unitary(int dim, Rng& rng);

// Haar-like unitary commuting with the conjugation of the shape: average a
// Haar unitary with its conjugation image, then restore unitarity through
// the polar decomposition (which stays inside the commutant).
Matrix random_gamma_commuting_unitary(const SystemShape& shape, Rng& rng);

// Block-diagonal transform with independent conjugation-commuting blocks.
BogolubovTransform random_local_bogolubov(const SystemShape& shape, Rng& rng);

// i * (commuting unitary) anticommutes with the conjugation; 2n x 2n.
Matrix random_anticommuting_unitary(int n, Rng& rng);

// V P_st V^dag for a random local V: a certified maximally entangled state.
CovarianceMatrix random_certified_state(int n, Rng& rng);

// Conjugate of the occupied product state by a random global
// conjugation-commuting unitary: a generic pure covariance.
CovarianceMatrix random_basis_projection(const SystemShape& shape, Rng& rng);

// Convex mix of two random basis projections with the tracial covariance:
// a generic (usually non-pure) valid covariance.
CovarianceMatrix random_covariance(const SystemShape& shape, Rng& rng);

}  // namespace fermigauss
