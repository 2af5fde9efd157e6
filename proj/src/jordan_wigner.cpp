#include "fermigauss/jordan_wigner.hpp"

#include <Eigen/LU>

namespace fermigauss {

RealMatrix reversed_identity(int n) {
  if (n < 1) throw ShapeError("reversed identity needs n >= 1");
  RealMatrix h = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) h(j, n - 1 - j) = 1.0;
  return h;
}

RealMatrix pair_chain_generator(int n) {
  const RealMatrix h = reversed_identity(n);
  RealMatrix g = RealMatrix::Zero(2 * n, 2 * n);
  g.topRightCorner(n, n) = h;
  g.bottomLeftCorner(n, n) = -h;
  return g;
}

CovarianceMatrix coherent_covariance(const SystemShape& shape, const RealMatrix& g, double eps) {
  const int m = shape.modes();
  if (g.rows() != m || g.cols() != m)
    throw ShapeError("generator must be " + std::to_string(m) + "x" + std::to_string(m));
  const double antisym_dev = (g + g.transpose()).cwiseAbs().maxCoeff();
  if (antisym_dev > eps)
    throw InvariantError("generator is not antisymmetric (deviation " +
                         std::to_string(antisym_dev) + ")");

  const RealMatrix id = RealMatrix::Identity(m, m);
  Eigen::FullPivLU<RealMatrix> lu(id - g);
  if (!lu.isInvertible())
    throw InvariantError("singular generator: 1 - G is not invertible");
  // (1+G) commutes with (1-G)^{-1}, so left division gives the Cayley image.
  const RealMatrix t = lu.solve(RealMatrix(id + g));

  const RealMatrix pair = 0.25 * (t - t.transpose());        // <c^dag c^dag>
  const RealMatrix occ = 0.25 * (2.0 * id - t - t.transpose());  // <c^dag c>

  Matrix s = Matrix::Zero(shape.dim(), shape.dim());
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      s(shape.plus_component(u), shape.plus_component(v)) = occ(u, v);
      s(shape.plus_component(u), shape.minus_component(v)) = pair(u, v);
      s(shape.minus_component(u), shape.plus_component(v)) = -pair(u, v);
      s(shape.minus_component(u), shape.minus_component(v)) =
          (u == v ? 1.0 : 0.0) - occ(v, u);
    }
  }
  return {shape, std::move(s)};
}

CovarianceMatrix pair_chain_covariance(int n) {
  const SystemShape shape(n, n);
  const RealMatrix h = reversed_identity(n);
  Matrix s = 0.5 * Matrix::Identity(shape.dim(), shape.dim());
  s.block(0, 3 * n, n, n) = 0.5 * h;
  s.block(n, 2 * n, n, n) = -0.5 * h;
  s.block(2 * n, n, n, n) = -0.5 * h;
  s.block(3 * n, 0, n, n) = 0.5 * h;
  return {shape, std::move(s)};
}

}  // namespace fermigauss
