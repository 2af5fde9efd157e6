#pragma once

#include <Eigen/Dense>
#include <complex>

#include "fermigauss/errors.hpp"

namespace fermigauss {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Single absolute tolerance used by every validation routine.
inline constexpr double kDefaultEps = 1e-9;

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

enum class Subsystem { alice, bob };

// Mode layout of the one-particle space.  Components are ordered in four
// blocks (A+, A-, B+, B-); a "+" component of mode u carries the annihilator
// c_u and the matching "-" component carries the creator c_u^dag.  A shape
// with n_bob == 0 describes a single-party space with blocks (+, -).
struct SystemShape {
  int n_alice = 0;
  int n_bob   = 0;

  SystemShape(int alice_modes, int bob_modes) : n_alice(alice_modes), n_bob(bob_modes) {
    if (alice_modes < 1 || bob_modes < 0)
      throw ShapeError("system shape requires n_alice >= 1 and n_bob >= 0");
  }

  int modes() const { return n_alice + n_bob; }
  int dim() const { return 2 * (n_alice + n_bob); }
  int alice_dim() const { return 2 * n_alice; }
  int bob_dim() const { return 2 * n_bob; }
  bool single_party() const { return n_bob == 0; }

  // Global modes are numbered 0..modes()-1 with Alice first.
  int plus_component(int mode) const {
    return mode < n_alice ? mode : 2 * n_alice + (mode - n_alice);
  }
  int minus_component(int mode) const {
    return mode < n_alice ? n_alice + mode : 2 * n_alice + n_bob + (mode - n_alice);
  }

  bool component_is_minus(int comp) const {
    if (comp < 2 * n_alice) return comp >= n_alice;
    return comp - 2 * n_alice >= n_bob;
  }
  int component_mode(int comp) const {
    if (comp < 2 * n_alice) return comp % n_alice;
    return n_alice + (comp - 2 * n_alice) % n_bob;
  }
  bool component_is_alice(int comp) const { return comp < 2 * n_alice; }

  // Swap of the +/- blocks within each party; the involution underlying
  // the antiunitary conjugation.
  int conjugate_component(int comp) const {
    int mode = component_mode(comp);
    return component_is_minus(comp) ? plus_component(mode) : minus_component(mode);
  }

  SystemShape alice_only() const { return SystemShape(n_alice, 0); }
  SystemShape bob_only() const {
    if (n_bob < 1) throw ShapeError("shape has no Bob modes");
    return SystemShape(n_bob, 0);
  }

  bool operator==(const SystemShape& o) const {
    return n_alice == o.n_alice && n_bob == o.n_bob;
  }
  bool operator!=(const SystemShape& o) const { return !(*this == o); }
};

}  // namespace fermigauss
