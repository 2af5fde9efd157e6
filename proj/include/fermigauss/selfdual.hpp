#pragma once

#include <string>
#include <vector>

#include "fermigauss/types.hpp"

namespace fermigauss {

// Antiunitary conjugation on the one-particle space.  Acts as the +/- block
// swap within each party composed with entrywise complex conjugation; stored
// as the swap permutation, never as a dense matrix.
class Conjugation {
 public:
  explicit Conjugation(SystemShape shape);

  const SystemShape& shape() const { return shape_; }

  Vector apply(const Vector& f) const;

  // X -> Gamma X Gamma, a linear operator for linear X.
  Matrix conjugate(const Matrix& x) const;

  int permuted(int component) const { return perm_[component]; }
  const std::vector<int>& permutation() const { return perm_; }

 private:
  SystemShape shape_;
  std::vector<int> perm_;
};

struct CovarianceMatrix {
  SystemShape shape;
  Matrix entries;

  CovarianceMatrix(SystemShape s, Matrix m);

  Matrix block_aa() const { return entries.topLeftCorner(shape.alice_dim(), shape.alice_dim()); }
  Matrix block_ab() const { return entries.topRightCorner(shape.alice_dim(), shape.bob_dim()); }
  Matrix block_ba() const { return entries.bottomLeftCorner(shape.bob_dim(), shape.alice_dim()); }
  Matrix block_bb() const { return entries.bottomRightCorner(shape.bob_dim(), shape.bob_dim()); }
};

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  bool pass = false;
};

struct ValidationReport {
  bool valid = false;
  double tolerance = kDefaultEps;
  std::vector<CheckResult> checks;

  double deviation(const std::string& name) const;
};

// Checks hermiticity, the eigenvalue range [0, 1], and the conjugation
// constraint S + Gamma S Gamma = 1.  Every deviation is reported even when
// an earlier check fails; eigenvalues are taken from (S + S^dag)/2.
ValidationReport validate_covariance(const SystemShape& shape, const Matrix& s,
                                     double eps = kDefaultEps);
ValidationReport validate_covariance(const CovarianceMatrix& s, double eps = kDefaultEps);

struct ProjectionCheck {
  bool is_projection = false;
  double deviation = 0.0;  // max |P^2 - P|
};

// Pure-state test; expects a covariance that already passed validation.
ProjectionCheck is_basis_projection(const CovarianceMatrix& s, double eps = kDefaultEps);

// Restriction to one party; the result lives on the single-party shape.
CovarianceMatrix reduce(const CovarianceMatrix& s, Subsystem which);

struct BogolubovTransform {
  SystemShape shape;
  Matrix entries;
  bool local = false;
};

// max |Gamma V Gamma - V|
double gamma_commutation_deviation(const Conjugation& gamma, const Matrix& v);
// max |V^dag V - 1| and |V V^dag - 1|
double unitarity_deviation(const Matrix& v);

BogolubovTransform identity_transform(const SystemShape& shape);

// Block-diagonal transform from per-party blocks; each block must be unitary
// and commute with its party conjugation within eps.
BogolubovTransform make_local(const SystemShape& shape, const Matrix& v_alice,
                              const Matrix& v_bob, double eps = kDefaultEps);

// S -> V S V^dag after checking unitarity and conjugation-commutation of V.
CovarianceMatrix apply_bogolubov(const BogolubovTransform& v, const CovarianceMatrix& s,
                                 double eps = kDefaultEps);

// Covariance of the pure product state with every mode occupied,
// diag(1, 0) per party.
CovarianceMatrix product_state(const SystemShape& shape);

// Covariance 1/2 * identity (the tracial state).
CovarianceMatrix half_identity(const SystemShape& shape);

}  // namespace fermigauss
