#include "fermigauss/dynamics.hpp"

#include <cmath>

namespace fermigauss {

Matrix entangler_hamiltonian(int n) {
  if (n < 1) throw ShapeError("entangler needs n >= 1");
  const Matrix id = Matrix::Identity(n, n);
  Matrix h = Matrix::Zero(4 * n, 4 * n);
  h.block(0, 3 * n, n, n) = id;
  h.block(n, 2 * n, n, n) = -id;
  h.block(2 * n, n, n, n) = -id;
  h.block(3 * n, 0, n, n) = id;
  return h;
}

BogolubovTransform evolution_unitary(const Matrix& h, double t) {
  if (h.rows() != h.cols() || h.rows() % 4 != 0 || h.rows() < 4)
    throw ShapeError("entangler must be 4n x 4n");
  const int n = static_cast<int>(h.rows()) / 4;
  const Matrix v =
      std::cos(t) * Matrix::Identity(h.rows(), h.rows()) + kI * std::sin(t) * h;
  return {SystemShape(n, n), v, false};
}

CovarianceMatrix evolve(const CovarianceMatrix& initial, double t, double eps) {
  if (initial.shape.n_bob != initial.shape.n_alice)
    throw ShapeError("entangler evolution requires equal Alice and Bob mode counts");
  const int d = initial.shape.dim();
  const Matrix h = entangler_hamiltonian(initial.shape.n_alice);
  const Matrix& e0 = initial.entries;
  const Matrix id = Matrix::Identity(d, d);

  const double mismatch = max_abs(Matrix(h * e0 * h - (id - e0)));
  if (mismatch > eps)
    throw InvariantError(
        "initial covariance incompatible with the entangler reflection (deviation " +
        std::to_string(mismatch) + ")");

  const double c = std::cos(t);
  const double s = std::sin(t);
  Matrix et = c * c * e0 + s * s * (id - e0) + kI * s * c * (e0 * h - h * e0);
  return {initial.shape, std::move(et)};
}

}  // namespace fermigauss
