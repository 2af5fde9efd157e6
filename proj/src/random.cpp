#include "fermigauss/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "fermigauss/entanglement.hpp"

namespace fermigauss {

Vector random_field(const SystemShape& shape, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector f(shape.dim());
  for (int i = 0; i < shape.dim(); ++i) f(i) = Complex(normal(rng), normal(rng));
  return f;
}

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

RealMatrix random_antisymmetric(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = normal(rng);
  return 0.5 * (a - a.transpose());
}

Matrix random_unitary(int dim, Rng& rng) {
  const Matrix z = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_gamma_commuting_unitary(const SystemShape& shape, Rng& rng) {
  const Conjugation gamma(shape);
  const int d = shape.dim();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Matrix q = random_unitary(d, rng);
    const Matrix averaged = 0.5 * (q + gamma.conjugate(q));

    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(averaged.adjoint() * averaged));
    if (es.eigenvalues().minCoeff() < 1e-6) continue;  // degenerate average, redraw
    const Matrix v = averaged * es.operatorInverseSqrt();

    if (unitarity_deviation(v) < 1e-12 && gamma_commutation_deviation(gamma, v) < 1e-12)
      return v;
  }
  throw InvariantError("failed to sample a conjugation-commuting unitary");
}

BogolubovTransform random_local_bogolubov(const SystemShape& shape, Rng& rng) {
  const Matrix va = random_gamma_commuting_unitary(shape.alice_only(), rng);
  Matrix vb(0, 0);
  if (shape.n_bob > 0) vb = random_gamma_commuting_unitary(shape.bob_only(), rng);
  return make_local(shape, va, vb, 1e-10);
}

Matrix random_anticommuting_unitary(int n, Rng& rng) {
  return kI * random_gamma_commuting_unitary(SystemShape(n, 0), rng);
}

CovarianceMatrix random_certified_state(int n, Rng& rng) {
  const SystemShape shape(n, n);
  return apply_bogolubov(random_local_bogolubov(shape, rng), standard_state(n), 1e-10);
}

CovarianceMatrix random_basis_projection(const SystemShape& shape, Rng& rng) {
  const BogolubovTransform v{shape, random_gamma_commuting_unitary(shape, rng), false};
  return apply_bogolubov(v, product_state(shape), 1e-10);
}

CovarianceMatrix random_covariance(const SystemShape& shape, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double w1 = uniform(rng), w2 = uniform(rng), w3 = uniform(rng);
  const double total = w1 + w2 + w3;
  w1 /= total;
  w2 /= total;
  w3 /= total;
  const Matrix mix = w1 * random_basis_projection(shape, rng).entries +
                     w2 * random_basis_projection(shape, rng).entries +
                     w3 * half_identity(shape).entries;
  return {shape, mix};
}

}  // namespace fermigauss
