#include "fermigauss/wick.hpp"

#include <numeric>

namespace fermigauss {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

void build_pairings(std::vector<int>& remaining, std::vector<int>& order,
                    std::vector<Pairing>& out) {
  if (remaining.empty()) {
    out.push_back({order, permutation_sign(order)});
    return;
  }
  const int leader = remaining.front();
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    const int partner = remaining[i];
    order.push_back(leader);
    order.push_back(partner);
    std::vector<int> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t k = 1; k < remaining.size(); ++k)
      if (k != i) rest.push_back(remaining[k]);
    build_pairings(rest, order, out);
    order.pop_back();
    order.pop_back();
  }
}

}  // namespace

std::vector<Pairing> enumerate_pairings(int pairs, int max_pairs) {
  if (pairs < 0) throw ShapeError("pair count must be non-negative");
  if (pairs > max_pairs)
    throw CapError("pairing enumeration capped at " + std::to_string(max_pairs) + " pairs, got " +
                   std::to_string(pairs));
  std::vector<int> remaining(2 * static_cast<std::size_t>(pairs));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> order;
  order.reserve(remaining.size());
  std::vector<Pairing> out;
  build_pairings(remaining, order, out);
  return out;
}

Complex two_point(const CovarianceMatrix& s, const Vector& f, const Vector& g) {
  const int d = s.shape.dim();
  if (f.size() != d || g.size() != d)
    throw ShapeError("field vector length does not match covariance shape");
  Conjugation gamma(s.shape);
  return gamma.apply(f).dot(s.entries * g);
}

Complex wick_from_kernel(const Matrix& kernel, const std::vector<int>& idx, int max_pairs) {
  if (idx.size() % 2 != 0) return Complex(0.0, 0.0);
  if (idx.empty()) return Complex(1.0, 0.0);
  const int pairs = static_cast<int>(idx.size()) / 2;
  Complex total(0.0, 0.0);
  for (const Pairing& p : enumerate_pairings(pairs, max_pairs)) {
    Complex term(static_cast<double>(p.sign), 0.0);
    for (int k = 0; k < pairs; ++k)
      term *= kernel(idx[p.order[2 * k]], idx[p.order[2 * k + 1]]);
    total += term;
  }
  return total;
}

Complex wick_expectation(const CovarianceMatrix& s, const std::vector<Vector>& fields,
                         int max_pairs) {
  if (fields.size() % 2 != 0) return Complex(0.0, 0.0);
  if (fields.empty()) return Complex(1.0, 0.0);
  const int m = static_cast<int>(fields.size());
  if (m / 2 > max_pairs)
    throw CapError("Wick expectation capped at " + std::to_string(2 * max_pairs) +
                   " field operators, got " + std::to_string(m));

  Matrix kernel(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) kernel(a, b) = two_point(s, fields[a], fields[b]);

  std::vector<int> idx(fields.size());
  std::iota(idx.begin(), idx.end(), 0);
  return wick_from_kernel(kernel, idx, max_pairs);
}

bool cyclic_trace_check(const SystemShape& shape, const std::vector<Vector>& fields, double eps) {
  const CovarianceMatrix trace_state = half_identity(shape);
  const Complex plain = wick_expectation(trace_state, fields);
  std::vector<Vector> rotated;
  rotated.reserve(fields.size());
  if (!fields.empty()) {
    rotated.push_back(fields.back());
    rotated.insert(rotated.end(), fields.begin(), fields.end() - 1);
  }
  const Complex cycled = wick_expectation(trace_state, rotated);
  return std::abs(plain - cycled) <= eps;
}

}  // namespace fermigauss
