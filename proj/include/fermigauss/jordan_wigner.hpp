#pragma once

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

// The n x n reversed identity (Hankel pattern), entries delta_{j+k, n-1}.
RealMatrix reversed_identity(int n);

// Real antisymmetric orthogonal generator pairing site j with site 2n+1-j
// across the chain midpoint: blocks (0, H; -H, 0) with H the reversed
// identity.
RealMatrix pair_chain_generator(int n);

// Covariance of the normalized coherent state
//   exp(1/2 sum_{jk} G_{jk} c_j^dag c_k^dag) |vacuum>
// for a real antisymmetric G over all modes of the shape.  With
// T = (1+G)(1-G)^{-1}:
//   <c_j^dag c_k^dag> = (T - T^t)_{jk} / 4 = -<c_j c_k>
//   <c_j^dag c_k>     = (2 - T - T^t)_{jk} / 4
CovarianceMatrix coherent_covariance(const SystemShape& shape, const RealMatrix& g,
                                     double eps = kDefaultEps);

// Covariance of the Jordan-Wigner image of a chain of maximally entangled
// spin pairs on 2n sites (Alice sites 1..n, Bob sites n+1..2n):
//   1/2 * (1  0  0  H;  0  1 -H  0;  0 -H  1  0;  H  0  0  1)
// in the (A+, A-, B+, B-) blocks, H the reversed identity.
CovarianceMatrix pair_chain_covariance(int n);

}  // namespace fermigauss
