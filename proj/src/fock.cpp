#include "fermigauss/fock.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <functional>
#include <unsupported/Eigen/KroneckerProduct>

#include "fermigauss/dynamics.hpp"
#include "fermigauss/wick.hpp"

namespace fermigauss {

namespace {

int popcount(long x) { return std::popcount(static_cast<unsigned long>(x)); }

}  // namespace

FockSpace::FockSpace(SystemShape shape) : shape_(shape) {
  const int m = shape_.modes();
  if (m > kFockModeCap)
    throw CapError("dense oracle capped at " + std::to_string(kFockModeCap) +
                   " total modes, got " + std::to_string(m));
  dim_ = 1L << m;
  c_.resize(m);
  cdag_.resize(m);
}

const Matrix& FockSpace::annihilator(int mode) const {
  Matrix& cj = c_[mode];
  if (cj.size() == 0) {
    const int m = modes();
    const long mask = 1L << (m - 1 - mode);
    cj = Matrix::Zero(dim_, dim_);
    for (long b = 0; b < dim_; ++b) {
      if ((b & mask) == 0) continue;
      const int before = popcount(b >> (m - mode));  // occupied modes preceding
      cj(b & ~mask, b) = before % 2 == 0 ? 1.0 : -1.0;
    }
  }
  return cj;
}

const Matrix& FockSpace::creator(int mode) const {
  Matrix& cdag = cdag_[mode];
  if (cdag.size() == 0) cdag = annihilator(mode).adjoint();
  return cdag;
}

Matrix FockSpace::field_operator(const Vector& f) const {
  if (f.size() != shape_.dim()) throw ShapeError("field vector length does not match shape");
  Matrix b = Matrix::Zero(dim_, dim_);
  for (int u = 0; u < modes(); ++u) {
    b += f(shape_.plus_component(u)) * annihilator(u);
    b += f(shape_.minus_component(u)) * creator(u);
  }
  return b;
}

const Matrix& FockSpace::component_operator(int comp) const {
  const int mode = shape_.component_mode(comp);
  return shape_.component_is_minus(comp) ? creator(mode) : annihilator(mode);
}

Vector FockSpace::vacuum_vector() const {
  Vector v = Vector::Zero(dim_);
  v(0) = 1.0;
  return v;
}

bool FockSpace::alice_bit(long basis_index, int mode) const {
  return (basis_index >> (modes() - 1 - mode)) & 1;
}

Matrix FockSpace::parity_global() const {
  Matrix p = Matrix::Zero(dim_, dim_);
  for (long b = 0; b < dim_; ++b) p(b, b) = popcount(b) % 2 == 0 ? 1.0 : -1.0;
  return p;
}

Matrix FockSpace::parity_alice() const {
  Matrix p = Matrix::Zero(dim_, dim_);
  for (long b = 0; b < dim_; ++b)
    p(b, b) = popcount(b >> shape_.n_bob) % 2 == 0 ? 1.0 : -1.0;
  return p;
}

Matrix FockSpace::parity_bob() const {
  const long bob_mask = (1L << shape_.n_bob) - 1;
  Matrix p = Matrix::Zero(dim_, dim_);
  for (long b = 0; b < dim_; ++b) p(b, b) = popcount(b & bob_mask) % 2 == 0 ? 1.0 : -1.0;
  return p;
}

Vector vacuum_of_projection(const CovarianceMatrix& p, double eps) {
  FockSpace fs(p.shape);
  const int d = p.shape.dim();

  const Matrix herm = 0.5 * (p.entries + p.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);

  // ker(P) spans the annihilating fields of the state.
  Matrix quad = Matrix::Zero(fs.dimension(), fs.dimension());
  for (int k = 0; k < d; ++k) {
    if (es.eigenvalues()(k) >= 0.5) continue;
    const Matrix b = fs.field_operator(es.eigenvectors().col(k));
    quad += b.adjoint() * b;
  }

  Eigen::SelfAdjointEigenSolver<Matrix> kernel(quad);
  std::vector<int> null_indices;
  for (long k = 0; k < fs.dimension(); ++k)
    if (kernel.eigenvalues()(k) < kNullThreshold) null_indices.push_back(static_cast<int>(k));
  if (null_indices.size() != 1)
    throw InvariantError("vacuum degeneracy: common kernel dimension " +
                         std::to_string(null_indices.size()) +
                         " (covariance is not a basis projection within " +
                         std::to_string(eps) + ")");

  Vector omega = kernel.eigenvectors().col(null_indices.front());
  Eigen::Index at = 0;
  omega.cwiseAbs().maxCoeff(&at);
  omega *= std::conj(omega(at)) / std::abs(omega(at));
  return omega;
}

CovarianceMatrix covariance_from_density(const SystemShape& shape, const Matrix& rho) {
  FockSpace fs(shape);
  if (rho.rows() != fs.dimension() || rho.cols() != fs.dimension())
    throw ShapeError("density dimension does not match 2^modes");
  const int d = shape.dim();

  Matrix s(d, d);
  for (int i = 0; i < d; ++i) {
    const Matrix left = rho * fs.component_operator(shape.conjugate_component(i));
    for (int j = 0; j < d; ++j)
      s(i, j) = left.cwiseProduct(fs.component_operator(j).transpose()).sum();
  }
  return {shape, std::move(s)};
}

Matrix density_from_covariance(const CovarianceMatrix& s) {
  const int m = s.shape.modes();
  if (m > kMaxWickPairs)
    throw CapError("density reconstruction capped at " + std::to_string(kMaxWickPairs) +
                   " total modes, got " + std::to_string(m));
  FockSpace fs(s.shape);
  const long dim = fs.dimension();
  const int gen = 2 * m;

  // Majorana generators c_u + c_u^dag and i(c_u - c_u^dag).
  std::vector<Vector> mvec(gen);
  for (int u = 0; u < m; ++u) {
    Vector plus = Vector::Zero(s.shape.dim());
    Vector minus = Vector::Zero(s.shape.dim());
    plus(s.shape.plus_component(u)) = 1.0;
    minus(s.shape.minus_component(u)) = 1.0;
    mvec[2 * u] = plus + minus;
    mvec[2 * u + 1] = kI * (plus - minus);
  }

  Matrix kernel(gen, gen);
  for (int a = 0; a < gen; ++a)
    for (int b = 0; b < gen; ++b) kernel(a, b) = two_point(s, mvec[a], mvec[b]);

  std::vector<Matrix> mop(gen);
  for (int a = 0; a < gen; ++a) mop[a] = fs.field_operator(mvec[a]);

  // rho = 2^-m sum_I tr(rho m_I^dag) m_I over ordered Majorana monomials;
  // the coefficient is the Wick sum for the reversed index list.  Each
  // monomial is one multiply on top of its prefix.
  Matrix rho = Matrix::Zero(dim, dim);
  std::vector<Matrix> products{Matrix::Identity(dim, dim)};
  std::vector<int> chosen;

  std::function<void(int)> visit = [&](int start) {
    if (chosen.size() % 2 == 0) {
      std::vector<int> reversed(chosen.rbegin(), chosen.rend());
      const Complex w = wick_from_kernel(kernel, reversed);
      if (std::abs(w) > 0.0) rho += w * products.back();
    }
    for (int a = start; a < gen; ++a) {
      chosen.push_back(a);
      products.push_back(products.back() * mop[a]);
      visit(a + 1);
      products.pop_back();
      chosen.pop_back();
    }
  };
  visit(0);

  rho /= static_cast<double>(dim);
  return rho;
}

double ParityBlockDecomposition::probability(int alice_parity, int bob_parity) const {
  for (const auto& b : blocks)
    if (b.alice_parity == alice_parity && b.bob_parity == bob_parity) return b.probability;
  throw std::out_of_range("parity labels must be +1 or -1");
}

double ParityBlockDecomposition::support_dichotomy_deviation() const {
  const double equal = probability(+1, +1) + probability(-1, -1);
  const double opposite = probability(+1, -1) + probability(-1, +1);
  return std::min(equal, opposite);
}

ParityBlockDecomposition parity_blocks(const SystemShape& shape, const Matrix& rho) {
  if (shape.n_alice != shape.n_bob || shape.n_alice < 1)
    throw ShapeError("parity blocks require equal Alice and Bob mode counts");
  const int n = shape.n_alice;
  FockSpace fs(shape);
  if (rho.rows() != fs.dimension() || rho.cols() != fs.dimension())
    throw ShapeError("density dimension does not match 2^modes");

  const long side = 1L << n;
  std::array<std::vector<long>, 2> by_parity;  // [0] even, [1] odd
  for (long x = 0; x < side; ++x) by_parity[popcount(x) % 2].push_back(x);

  ParityBlockDecomposition out;
  out.n = n;
  out.block_dim = 1L << (n - 1);

  const std::array<std::pair<int, int>, 4> labels{{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto [pa, pb] = labels[k];
    const auto& rows_a = by_parity[pa == +1 ? 0 : 1];
    const auto& rows_b = by_parity[pb == +1 ? 0 : 1];
    const long bd = static_cast<long>(rows_a.size());

    Matrix block(bd * bd, bd * bd);
    for (long ia = 0; ia < bd; ++ia)
      for (long ib = 0; ib < bd; ++ib)
        for (long ja = 0; ja < bd; ++ja)
          for (long jb = 0; jb < bd; ++jb)
            block(ia * bd + ib, ja * bd + jb) =
                rho(rows_a[ia] * side + rows_b[ib], rows_a[ja] * side + rows_b[jb]);

    ParityBlock& pb_out = out.blocks[k];
    pb_out.alice_parity = pa;
    pb_out.bob_parity = pb;
    pb_out.probability = block.trace().real();
    pb_out.state = pb_out.probability > 1e-14 ? Matrix(block / pb_out.probability)
                                              : Matrix::Zero(bd * bd, bd * bd);
  }
  return out;
}

BlockMaximalityReport check_block_maximality(const SystemShape& shape, const Matrix& rho,
                                             double eps) {
  const ParityBlockDecomposition decomposition = parity_blocks(shape, rho);
  const long bd = decomposition.block_dim;

  BlockMaximalityReport report;
  report.degenerate = decomposition.n == 1;
  report.maximal = true;
  for (const ParityBlock& block : decomposition.blocks) {
    if (block.probability <= eps) continue;
    BlockMaximality entry;
    entry.alice_parity = block.alice_parity;
    entry.bob_parity = block.bob_parity;
    entry.probability = block.probability;
    entry.purity_deviation = max_abs(Matrix(block.state * block.state - block.state));
    const Matrix reduced = partial_trace_bob(block.state, bd, bd);
    entry.reduced_deviation = max_abs(
        Matrix(reduced - Matrix::Identity(bd, bd) / static_cast<double>(bd)));
    entry.entropy_bits = von_neumann_entropy_bits(reduced);
    if (entry.purity_deviation > eps || entry.reduced_deviation > eps) report.maximal = false;
    report.blocks.push_back(entry);
  }
  return report;
}

double entanglement_of_formation(const SystemShape& shape, const Matrix& rho, double eps) {
  const ParityBlockDecomposition decomposition = parity_blocks(shape, rho);
  const long bd = decomposition.block_dim;

  double bits = 0.0;
  for (const ParityBlock& block : decomposition.blocks) {
    if (block.probability <= eps) continue;
    const double purity_dev = max_abs(Matrix(block.state * block.state - block.state));
    if (purity_dev > eps)
      throw InvariantError("parity block (" + std::to_string(block.alice_parity) + ", " +
                           std::to_string(block.bob_parity) +
                           ") is mixed (purity deviation " + std::to_string(purity_dev) +
                           "); entanglement of formation undefined here");
    bits += block.probability * von_neumann_entropy_bits(partial_trace_bob(block.state, bd, bd));
  }
  return bits;
}

double untwist_field_deviation(const SystemShape& shape, const Vector& f) {
  if (shape.n_bob < 1) throw ShapeError("untwisting requires a bipartite shape");
  if (f.size() != shape.dim()) throw ShapeError("field vector length does not match shape");
  FockSpace fs(shape);
  FockSpace fs_a(shape.alice_only());
  FockSpace fs_b(shape.bob_only());

  const Vector fa = f.head(shape.alice_dim());
  const Vector fb = f.tail(shape.bob_dim());

  const Matrix lhs = fs.field_operator(f);
  const Matrix rhs =
      Eigen::kroneckerProduct(fs_a.field_operator(fa),
                              Matrix::Identity(fs_b.dimension(), fs_b.dimension())) +
      Eigen::kroneckerProduct(fs_a.parity_global(), fs_b.field_operator(fb));
  return max_abs(Matrix(lhs - rhs));
}

double untwist_monomial_deviation(const SystemShape& shape,
                                  const std::vector<Vector>& alice_fields,
                                  const std::vector<Vector>& bob_fields) {
  if (shape.n_bob < 1) throw ShapeError("untwisting requires a bipartite shape");
  FockSpace fs(shape);
  FockSpace fs_a(shape.alice_only());
  FockSpace fs_b(shape.bob_only());

  const auto embed_alice = [&](const Vector& v) {
    Vector out = Vector::Zero(shape.dim());
    out.head(shape.alice_dim()) = v;
    return out;
  };
  const auto embed_bob = [&](const Vector& v) {
    Vector out = Vector::Zero(shape.dim());
    out.tail(shape.bob_dim()) = v;
    return out;
  };

  Matrix global = Matrix::Identity(fs.dimension(), fs.dimension());
  Matrix local_a = Matrix::Identity(fs_a.dimension(), fs_a.dimension());
  Matrix local_b = Matrix::Identity(fs_b.dimension(), fs_b.dimension());
  for (const Vector& v : alice_fields) {
    if (v.size() != shape.alice_dim()) throw ShapeError("Alice field must be single-party");
    global *= fs.field_operator(embed_alice(v));
    local_a *= fs_a.field_operator(v);
  }
  for (const Vector& v : bob_fields) {
    if (v.size() != shape.bob_dim()) throw ShapeError("Bob field must be single-party");
    global *= fs.field_operator(embed_bob(v));
    local_b *= fs_b.field_operator(v);
  }

  const bool bob_even = bob_fields.size() % 2 == 0;
  const Matrix tensor =
      bob_even ? Eigen::kroneckerProduct(local_a, local_b).eval()
               : Eigen::kroneckerProduct(Matrix(local_a * fs_a.parity_global()), local_b).eval();
  return max_abs(Matrix(global - tensor));
}

Matrix second_quantized_entangler(int n) {
  FockSpace fs(SystemShape(n, n));
  Matrix h = Matrix::Zero(fs.dimension(), fs.dimension());
  for (int j = 0; j < n; ++j)
    h += fs.annihilator(j) * fs.annihilator(n + j) +
         fs.creator(n + j) * fs.creator(j);
  return h;
}

double TraceStateReport::worst() const {
  return std::max({pair_identity_deviation, parity_two_point_deviation, trace_density_deviation,
                   heisenberg_deviation});
}

TraceStateReport trace_state_report(int n, int samples, std::mt19937_64& rng) {
  if (n < 1) throw ShapeError("trace-state checks need n >= 1");
  const SystemShape shape(n, 0);
  FockSpace fs(shape);
  Conjugation gamma(shape);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto draw = [&](const SystemShape& s) {
    Vector f(s.dim());
    for (int i = 0; i < s.dim(); ++i) f(i) = Complex(normal(rng), normal(rng));
    return f;
  };

  TraceStateReport report;

  const Matrix theta = fs.parity_global();
  const Matrix id = Matrix::Identity(fs.dimension(), fs.dimension());
  const Matrix even = 0.5 * (id + theta);
  const Matrix odd = 0.5 * (id - theta);
  const double scale = std::pow(2.0, 1 - n);
  for (const double p : {0.0, 0.25, 0.5, 1.0}) {
    const Matrix t = scale * (p * even + (1.0 - p) * odd);
    for (int k = 0; k < samples; ++k) {
      const Vector f = draw(shape);
      const Vector g = draw(shape);
      const Complex lhs = (t * fs.field_operator(f) * fs.field_operator(g)).trace();
      const Complex rhs = 0.5 * gamma.apply(f).dot(g);
      report.pair_identity_deviation =
          std::max(report.pair_identity_deviation, std::abs(lhs - rhs));
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      report.parity_two_point_deviation =
          std::max(report.parity_two_point_deviation,
                   std::abs((theta * fs.creator(i) * fs.annihilator(j)).trace()));

  const Matrix rho_half = density_from_covariance(half_identity(shape));
  report.trace_density_deviation =
      max_abs(Matrix(rho_half - id / static_cast<double>(fs.dimension())));

  const SystemShape pair_shape(n, n);
  FockSpace fs_ab(pair_shape);
  const Matrix hq = second_quantized_entangler(n);
  const Matrix h1 = entangler_hamiltonian(n);
  for (int k = 0; k < samples; ++k) {
    const Vector f = draw(pair_shape);
    const Matrix b = fs_ab.field_operator(f);
    report.heisenberg_deviation =
        std::max(report.heisenberg_deviation,
                 max_abs(Matrix(hq * b - b * hq - fs_ab.field_operator(h1 * f))));
  }
  return report;
}

double von_neumann_entropy_bits(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  double bits = 0.0;
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda > 1e-15) bits -= lambda * std::log2(lambda);
  }
  return bits;
}

Matrix partial_trace_bob(const Matrix& rho, long dim_a, long dim_b) {
  if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b)
    throw ShapeError("density dimension does not factor as dim_a * dim_b");
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (long ia = 0; ia < dim_a; ++ia)
    for (long ja = 0; ja < dim_a; ++ja)
      for (long ib = 0; ib < dim_b; ++ib) out(ia, ja) += rho(ia * dim_b + ib, ja * dim_b + ib);
  return out;
}

}  // namespace fermigauss
