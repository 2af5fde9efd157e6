#include "fermigauss/entanglement.hpp"

#include <algorithm>

namespace fermigauss {

double CertificateDeviations::worst() const {
  return std::max({purity, diag_a, diag_b, unitarity, anticommutation});
}

double gamma_anticommutation_deviation(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() % 2 != 0)
    throw ShapeError("anticommutation check needs a square even-dimensional matrix");
  const int n = static_cast<int>(u.rows()) / 2;
  const auto perm = [n](int i) { return i < n ? i + n : i - n; };
  double dev = 0.0;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      dev = std::max(dev, std::abs(std::conj(u(perm(i), perm(j))) + u(i, j)));
  return dev;
}

Certificate certify(const CovarianceMatrix& p, double eps) {
  if (p.shape.n_bob != p.shape.n_alice || p.shape.n_alice < 1)
    throw ShapeError("certification requires equal Alice and Bob mode counts");
  const int two_n = p.shape.alice_dim();

  Certificate cert;
  cert.tolerance = eps;

  cert.deviations.purity = is_basis_projection(p, eps).deviation;
  cert.deviations.diag_a =
      max_abs(Matrix(p.block_aa() - 0.5 * Matrix::Identity(two_n, two_n)));
  cert.deviations.diag_b =
      max_abs(Matrix(p.block_bb() - 0.5 * Matrix::Identity(two_n, two_n)));

  const Matrix u = 2.0 * p.block_ab();
  cert.deviations.unitarity = unitarity_deviation(u);
  cert.deviations.anticommutation = gamma_anticommutation_deviation(u);

  cert.maximally_entangled = cert.deviations.worst() <= eps;
  if (cert.maximally_entangled) cert.witness = u;
  return cert;
}

CovarianceMatrix standard_state(int n) {
  const SystemShape shape(n, n);
  const int two_n = 2 * n;
  Matrix p = 0.5 * Matrix::Identity(shape.dim(), shape.dim());
  for (int j = 0; j < two_n; ++j) {
    p(j, two_n + j) = 0.5 * kI;
    p(two_n + j, j) = -0.5 * kI;
  }
  return {shape, p};
}

CovarianceMatrix from_unitary(const Matrix& u_ab, double eps) {
  if (u_ab.rows() != u_ab.cols() || u_ab.rows() < 2 || u_ab.rows() % 2 != 0)
    throw ShapeError("witness unitary must be square with even dimension >= 2");
  const int n = static_cast<int>(u_ab.rows()) / 2;

  const double u_dev = unitarity_deviation(u_ab);
  const double a_dev = gamma_anticommutation_deviation(u_ab);
  if (u_dev > eps || a_dev > eps)
    throw InvariantError("matrix is not an anticommuting unitary (unitarity " +
                         std::to_string(u_dev) + ", anticommutation " + std::to_string(a_dev) +
                         ")");

  const SystemShape shape(n, n);
  Matrix p = 0.5 * Matrix::Identity(shape.dim(), shape.dim());
  p.topRightCorner(2 * n, 2 * n) = 0.5 * u_ab;
  p.bottomLeftCorner(2 * n, 2 * n) = 0.5 * u_ab.adjoint();
  return {shape, p};
}

BogolubovTransform normal_form(const CovarianceMatrix& p, double eps) {
  const Certificate cert = certify(p, eps);
  if (!cert.maximally_entangled)
    throw InvariantError("state is not maximally entangled (worst deviation " +
                         std::to_string(cert.deviations.worst()) + ")");
  const int two_n = p.shape.alice_dim();
  const Matrix v_alice = -kI * (*cert.witness);
  return make_local(p.shape, v_alice, Matrix::Identity(two_n, two_n), eps);
}

}  // namespace fermigauss
