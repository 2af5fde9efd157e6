#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

#include "doctest.h"
#include "fermigauss/entanglement.hpp"
#include "fermigauss/fock.hpp"
#include "fermigauss/jordan_wigner.hpp"
#include "fermigauss/selfdual.hpp"
#include "test_util.hpp"

using namespace fermigauss;
using testutil::entry_distance;

namespace {

// Spin-chain annihilators built from explicit Pauli strings, independent of
// the FockSpace construction. Site 0 is the most significant qubit.
std::vector<Matrix> spin_chain_annihilators(int sites) {
  Matrix sigma_minus(2, 2), pauli_z(2, 2), id2(2, 2);
  sigma_minus << 0, 1, 0, 0;
  pauli_z << 1, 0, 0, -1;
  id2 << 1, 0, 0, 1;
  std::vector<Matrix> out;
  for (int j = 0; j < sites; ++j) {
    Matrix op = Matrix::Identity(1, 1);
    for (int k = 0; k < sites; ++k) {
      const Matrix& factor = k < j ? pauli_z : (k == j ? sigma_minus : id2);
      op = Eigen::kroneckerProduct(op, factor).eval();
    }
    out.push_back(op);
  }
  return out;
}

// Uniform superposition over bit strings matched across the nested pairs
// (site j with site 2n-1-j); this is the spin-side Bell-pair chain.
Vector matched_pair_vector(int n) {
  const int sites = 2 * n;
  const long dim = 1L << sites;
  Vector psi = Vector::Zero(dim);
  for (long b = 0; b < dim; ++b) {
    bool matched = true;
    for (int j = 0; j < n; ++j) {
      const int bit_lo = static_cast<int>((b >> (sites - 1 - j)) & 1L);
      const int bit_hi = static_cast<int>((b >> j) & 1L);
      if (bit_lo != bit_hi) matched = false;
    }
    if (matched) psi(b) = 1.0;
  }
  return psi / psi.norm();
}

// Covariance assembled from raw spin-chain correlators of a state vector.
CovarianceMatrix spin_oracle_covariance(int n, const Vector& psi) {
  const SystemShape shape(n, n);
  const std::vector<Matrix> c = spin_chain_annihilators(2 * n);
  std::vector<Matrix> comp(shape.dim());
  for (int u = 0; u < 2 * n; ++u) {
    comp[shape.plus_component(u)] = c[u];
    comp[shape.minus_component(u)] = c[u].adjoint();
  }
  const Conjugation gamma(shape);
  Matrix s(shape.dim(), shape.dim());
  for (int i = 0; i < shape.dim(); ++i)
    for (int j = 0; j < shape.dim(); ++j)
      s(i, j) = psi.dot(comp[gamma.permuted(i)] * (comp[j] * psi));
  return CovarianceMatrix(shape, s);
}

// Quadratic raising operator (1/2) sum G_uv c_u^dag c_v^dag in the dense space.
Matrix pair_creation_operator(const FockSpace& space, const RealMatrix& g) {
  Matrix q = Matrix::Zero(space.dimension(), space.dimension());
  for (int u = 0; u < space.modes(); ++u)
    for (int v = 0; v < space.modes(); ++v)
      if (g(u, v) != 0.0) q += 0.5 * g(u, v) * space.creator(u) * space.creator(v);
  return q;
}

Vector coherent_vector(const FockSpace& space, const RealMatrix& g, double* raw_norm) {
  const Matrix q = pair_creation_operator(space, g);
  Vector psi = space.vacuum_vector();
  Vector term = psi;
  for (int order = 1; order <= space.modes(); ++order) {
    term = (q * term) / order;
    psi += term;
  }
  if (raw_norm) *raw_norm = psi.norm();
  return psi / psi.norm();
}

}  // namespace

TEST_CASE("reversed identity flips the mode order") {
  const RealMatrix h = reversed_identity(3);
  RealMatrix expected(3, 3);
  expected << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  CHECK((h - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the pair-chain generator is an antisymmetric orthogonal involution root") {
  for (int n = 1; n <= 5; ++n) {
    const RealMatrix g = pair_chain_generator(n);
    const RealMatrix id = RealMatrix::Identity(2 * n, 2 * n);
    CHECK((g + g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g.transpose() * g - id).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g * g + id).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("the pair-chain state at one mode per party has the pinned matrix") {
  const CovarianceMatrix s = pair_chain_covariance(1);
  Matrix expected(4, 4);
  expected << 0.5, 0, 0, 0.5,
              0, 0.5, -0.5, 0,
              0, -0.5, 0.5, 0,
              0.5, 0, 0, 0.5;
  CHECK(entry_distance(s.entries, expected) == 0.0);
}

TEST_CASE("the coherent-state route reproduces the pair-chain covariance") {
  for (int n = 1; n <= 6; ++n) {
    const CovarianceMatrix direct = pair_chain_covariance(n);
    const CovarianceMatrix via_generator =
        coherent_covariance(SystemShape(n, n), pair_chain_generator(n), 1e-10);
    CHECK(entry_distance(direct.entries, via_generator.entries) < 1e-12);
  }
}

TEST_CASE("pair-chain states certify as maximally entangled") {
  for (int n = 1; n <= 6; ++n) {
    const Certificate cert = certify(pair_chain_covariance(n), 1e-12);
    CHECK(cert.maximally_entangled);
    CHECK(cert.deviations.worst() < 1e-12);
  }
}

TEST_CASE("property: coherent states of antisymmetric generators are pure and valid") {
  Rng rng = testutil::seeded_rng(501);
  for (int trial = 0; trial < 50; ++trial) {
    const SystemShape shape = (trial % 2 == 0) ? SystemShape(2, 2) : SystemShape(3, 1);
    const RealMatrix g = random_antisymmetric(shape.modes(), rng);
    const CovarianceMatrix s = coherent_covariance(shape, g, 1e-9);
    CHECK(validate_covariance(s, 1e-9).valid);
    CHECK(is_basis_projection(s, 1e-9).is_projection);
  }
}

TEST_CASE("the zero generator gives the vacuum covariance") {
  const SystemShape shape(2, 1);
  const CovarianceMatrix s = coherent_covariance(shape, RealMatrix::Zero(3, 3), 1e-10);
  const Matrix expected =
      Matrix::Identity(shape.dim(), shape.dim()) - product_state(shape).entries;
  CHECK(entry_distance(s.entries, expected) == 0.0);
}

TEST_CASE("two-mode coherent pair amplitudes follow the rational closed form") {
  const SystemShape shape(1, 1);
  for (double gamma : {0.3, -1.7, 2.0}) {
    RealMatrix g(2, 2);
    g << 0, gamma, -gamma, 0;
    const CovarianceMatrix s = coherent_covariance(shape, g, 1e-10);
    const double pair = gamma / (1 + gamma * gamma);
    const double occ = gamma * gamma / (1 + gamma * gamma);
    CHECK(std::abs(s.entries(0, 3) - Complex(pair, 0)) < 1e-14);
    CHECK(std::abs(s.entries(0, 0) - Complex(occ, 0)) < 1e-14);
    CHECK(std::abs(s.entries(1, 2) - Complex(-pair, 0)) < 1e-14);
  }
}

TEST_CASE("coherent covariance rejects bad generators") {
  const SystemShape shape(2, 2);
  RealMatrix not_antisymmetric = RealMatrix::Identity(4, 4);
  CHECK_THROWS_AS(coherent_covariance(shape, not_antisymmetric, 1e-9), InvariantError);
  CHECK_THROWS_AS(coherent_covariance(shape, RealMatrix::Zero(3, 3), 1e-9), ShapeError);
}

TEST_CASE("oracle: dense coherent vectors reproduce the covariance formula") {
  Rng rng = testutil::seeded_rng(502);
  for (const SystemShape& shape : {SystemShape(1, 1), SystemShape(2, 1), SystemShape(2, 2)}) {
    const FockSpace space(shape);
    for (int trial = 0; trial < 5; ++trial) {
      const RealMatrix g = random_antisymmetric(shape.modes(), rng);
      double raw_norm = 0.0;
      const Vector psi = coherent_vector(space, g, &raw_norm);
      CHECK(raw_norm > 0.0);
      CHECK(std::isfinite(raw_norm));
      const RealMatrix gram = RealMatrix::Identity(shape.modes(), shape.modes()) +
                              g.transpose() * g;
      CHECK(std::abs(raw_norm - std::pow(gram.determinant(), 0.25)) < 1e-10);
      const CovarianceMatrix dense = covariance_from_density(shape, psi * psi.adjoint());
      CHECK(entry_distance(dense.entries, coherent_covariance(shape, g, 1e-9).entries) < 1e-10);
    }
  }
}

TEST_CASE("oracle: the spin-chain correlators match the pair-chain covariance") {
  for (int n = 2; n <= 4; ++n) {
    const Vector chi = matched_pair_vector(n);
    const CovarianceMatrix from_spins = spin_oracle_covariance(n, chi);
    CHECK(entry_distance(from_spins.entries, pair_chain_covariance(n).entries) < 1e-10);
  }
}

TEST_CASE("oracle: the strings drop from the paired fermionic product") {
  for (int n = 1; n <= 4; ++n) {
    const FockSpace space(SystemShape(n, n));
    Vector product = space.vacuum_vector();
    for (int j = 0; j < n; ++j) {
      const Matrix pair_op =
          Matrix::Identity(space.dimension(), space.dimension()) +
          space.creator(n - 1 - j) * space.creator(n + j);
      product = pair_op * product;
    }
    product /= product.norm();
    CHECK((product - matched_pair_vector(n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}
