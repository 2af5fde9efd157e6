#pragma once

#include <optional>

#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

struct CertificateDeviations {
  double purity = 0.0;          // max |P^2 - P|
  double diag_a = 0.0;          // max |P_AA - 1/2|
  double diag_b = 0.0;          // max |P_BB - 1/2|
  double unitarity = 0.0;       // max |U^dag U - 1|, U = 2 P_AB
  double anticommutation = 0.0;  // max |Gamma_A U + U Gamma_B|

  double worst() const;
};

struct Certificate {
  bool maximally_entangled = false;
  double tolerance = kDefaultEps;
  CertificateDeviations deviations;
  std::optional<Matrix> witness;  // U = 2 P_AB when certification succeeds
};

// Deviation of a square matrix U from Gamma_A U = -U Gamma_B; rows and
// columns refer to equal-sized single-party spaces.
double gamma_anticommutation_deviation(const Matrix& u);

// Decides whether P is the covariance of a maximally entangled pure state:
// P is a projection with both diagonal blocks 1/2 and off-diagonal block
// U/2 for an anticommuting unitary U.  All deviations are always reported.
// Requires n_alice == n_bob.
Certificate certify(const CovarianceMatrix& p, double eps = kDefaultEps);

// The distinguished maximally entangled covariance with U = i * identity.
CovarianceMatrix standard_state(int n);

// Builds the covariance 1/2 * [[1, U], [U^dag, 1]] from an anticommuting
// unitary U, rejecting inputs that violate either property.
CovarianceMatrix from_unitary(const Matrix& u_ab, double eps = kDefaultEps);

// Local transform W with W standard_state W^dag equal to P; Alice block
// -i * U from the certificate, Bob block identity.  Fails when P does not
// certify as maximally entangled.
BogolubovTransform normal_form(const CovarianceMatrix& p, double eps = kDefaultEps);

}  // namespace fermigauss
