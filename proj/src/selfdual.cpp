#include "fermigauss/selfdual.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <utility>

namespace fermigauss {

Conjugation::Conjugation(SystemShape shape) : shape_(shape), perm_(shape.dim()) {
  for (int i = 0; i < shape_.dim(); ++i) perm_[i] = shape_.conjugate_component(i);
}

Vector Conjugation::apply(const Vector& f) const {
  if (f.size() != shape_.dim()) throw ShapeError("field vector length does not match shape");
  Vector out(f.size());
  for (int i = 0; i < shape_.dim(); ++i) out(i) = std::conj(f(perm_[i]));
  return out;
}

Matrix Conjugation::conjugate(const Matrix& x) const {
  const int d = shape_.dim();
  if (x.rows() != d || x.cols() != d) throw ShapeError("operator dimension does not match shape");
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = std::conj(x(perm_[i], perm_[j]));
  return out;
}

CovarianceMatrix::CovarianceMatrix(SystemShape s, Matrix m) : shape(s), entries(std::move(m)) {
  if (entries.rows() != shape.dim() || entries.cols() != shape.dim())
    throw ShapeError("covariance matrix must be " + std::to_string(shape.dim()) + "x" +
                     std::to_string(shape.dim()));
}

double ValidationReport::deviation(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.deviation;
  throw std::out_of_range("no check named " + name);
}

ValidationReport validate_covariance(const SystemShape& shape, const Matrix& s, double eps) {
  const int d = shape.dim();
  if (s.rows() != d || s.cols() != d)
    throw ShapeError("covariance matrix must be " + std::to_string(d) + "x" + std::to_string(d));

  ValidationReport report;
  report.tolerance = eps;

  const double herm_dev = max_abs(Matrix(s - s.adjoint()));

  // Eigenvalue bounds are judged on the Hermitian part so that a tiny
  // hermiticity defect does not poison the spectrum check.
  const Matrix sym = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  const double range_dev = std::max(std::max(0.0, -lo), std::max(0.0, hi - 1.0));

  Conjugation gamma(shape);
  const double gamma_dev = max_abs(Matrix(s + gamma.conjugate(s) - Matrix::Identity(d, d)));

  report.checks.push_back({"hermitian", herm_dev, herm_dev <= eps});
  report.checks.push_back({"eigenvalue_bounds", range_dev, range_dev <= eps});
  report.checks.push_back({"gamma_constraint", gamma_dev, gamma_dev <= eps});
  report.valid = std::all_of(report.checks.begin(), report.checks.end(),
                             [](const CheckResult& c) { return c.pass; });
  return report;
}

ValidationReport validate_covariance(const CovarianceMatrix& s, double eps) {
  return validate_covariance(s.shape, s.entries, eps);
}

ProjectionCheck is_basis_projection(const CovarianceMatrix& s, double eps) {
  const double dev = max_abs(Matrix(s.entries * s.entries - s.entries));
  return {dev <= eps, dev};
}

CovarianceMatrix reduce(const CovarianceMatrix& s, Subsystem which) {
  if (which == Subsystem::alice) return {s.shape.alice_only(), s.block_aa()};
  if (s.shape.n_bob < 1) throw ShapeError("cannot reduce to Bob: shape has no Bob modes");
  return {s.shape.bob_only(), s.block_bb()};
}

double gamma_commutation_deviation(const Conjugation& gamma, const Matrix& v) {
  return max_abs(Matrix(gamma.conjugate(v) - v));
}

double unitarity_deviation(const Matrix& v) {
  const Matrix id = Matrix::Identity(v.rows(), v.cols());
  return std::max(max_abs(Matrix(v.adjoint() * v - id)), max_abs(Matrix(v * v.adjoint() - id)));
}

BogolubovTransform identity_transform(const SystemShape& shape) {
  return {shape, Matrix::Identity(shape.dim(), shape.dim()), true};
}

BogolubovTransform make_local(const SystemShape& shape, const Matrix& v_alice,
                              const Matrix& v_bob, double eps) {
  const int da = shape.alice_dim();
  const int db = shape.bob_dim();
  if (v_alice.rows() != da || v_alice.cols() != da)
    throw ShapeError("Alice block must be " + std::to_string(da) + "x" + std::to_string(da));
  if (v_bob.rows() != db || v_bob.cols() != db)
    throw ShapeError("Bob block must be " + std::to_string(db) + "x" + std::to_string(db));

  const double ua = unitarity_deviation(v_alice);
  const double ca = gamma_commutation_deviation(Conjugation(shape.alice_only()), v_alice);
  if (ua > eps || ca > eps)
    throw InvariantError("Alice block is not a conjugation-commuting unitary (unitarity " +
                         std::to_string(ua) + ", commutation " + std::to_string(ca) + ")");
  if (db > 0) {
    const double ub = unitarity_deviation(v_bob);
    const double cb = gamma_commutation_deviation(Conjugation(shape.bob_only()), v_bob);
    if (ub > eps || cb > eps)
      throw InvariantError("Bob block is not a conjugation-commuting unitary (unitarity " +
                           std::to_string(ub) + ", commutation " + std::to_string(cb) + ")");
  }

  Matrix v = Matrix::Zero(shape.dim(), shape.dim());
  v.topLeftCorner(da, da) = v_alice;
  v.bottomRightCorner(db, db) = v_bob;
  return {shape, v, true};
}

CovarianceMatrix apply_bogolubov(const BogolubovTransform& v, const CovarianceMatrix& s,
                                 double eps) {
  if (v.shape != s.shape) throw ShapeError("transform and covariance shapes differ");
  const double u_dev = unitarity_deviation(v.entries);
  const double c_dev = gamma_commutation_deviation(Conjugation(v.shape), v.entries);
  if (u_dev > eps || c_dev > eps)
    throw InvariantError("transform is not a conjugation-commuting unitary (unitarity " +
                         std::to_string(u_dev) + ", commutation " + std::to_string(c_dev) + ")");
  return {s.shape, v.entries * s.entries * v.entries.adjoint()};
}

CovarianceMatrix product_state(const SystemShape& shape) {
  Matrix e = Matrix::Zero(shape.dim(), shape.dim());
  for (int u = 0; u < shape.modes(); ++u) e(shape.plus_component(u), shape.plus_component(u)) = 1.0;
  return {shape, e};
}

CovarianceMatrix half_identity(const SystemShape& shape) {
  return {shape, 0.5 * Matrix::Identity(shape.dim(), shape.dim())};
}

}  // namespace fermigauss
