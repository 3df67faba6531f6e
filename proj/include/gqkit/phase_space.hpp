#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gqkit/observable.hpp"

namespace gq {

// Symplectic conventions used throughout:
//
//   omega = sum_j dq_j ^ dp_j,
//   X_f   = sum_j (df/dp_j) d_{q_j} - (df/dq_j) d_{p_j},
//   {f,g} = X_g(f),
//
// which makes df = X_f . omega, {f,g} = omega(X_f, X_g) and {q,p} = +1 hold
// simultaneously; the consistency of the trio is asserted in tests.

enum class ManifoldKind {
  FlatComplex,
  ProjectiveLine,
  Disk,
  Torus,
  Sphere,
  ProductSpheres,
  Cylinder,
};

// A model phase space together with hbar. The flat kinds carry global
// Darboux coordinates; the compact kinds carry the chart data the
// quantization checks need (radius, hermitian form, lattice).
struct ModelManifold {
  ManifoldKind kind = ManifoldKind::FlatComplex;
  int dim = 1;         // complex dimension for FlatComplex
  double hbar = 1.0;   // action units
  double radius = 1.0;       // Sphere
  double radius2 = 1.0;      // second factor of ProductSpheres
  double hermitian_form = 1.0;  // Torus: H(z,w) = h z conj(w), h > 0
  std::complex<double> lattice1{1.0, 0.0};  // Torus lattice generators
  std::complex<double> lattice2{0.0, 1.0};

  static ModelManifold flat(int n = 1, double hbar = 1.0);
  static ModelManifold projective_line(double hbar = 1.0);
  static ModelManifold disk(double hbar = 1.0);
  static ModelManifold torus(double h, std::complex<double> l1,
                             std::complex<double> l2, double hbar = 1.0);
  static ModelManifold sphere(double r, double hbar = 1.0);
  static ModelManifold product_spheres(double r1, double r2, double hbar = 1.0);
  static ModelManifold cylinder(double hbar = 1.0);

  bool has_global_darboux_chart() const;
  const char* name() const;
};

// A point in Darboux coordinates (q_1..q_n, p_1..p_n). The complex chart
// packs z_j = p_j + i q_j.
struct PhasePoint {
  Eigen::VectorXd coords;

  PhasePoint() = default;
  explicit PhasePoint(Eigen::VectorXd c);
  static PhasePoint qp(double q, double p);

  int dofs() const { return static_cast<int>(coords.size()) / 2; }
  double q(int j) const { return coords[j]; }
  double p(int j) const { return coords[dofs() + j]; }
  std::complex<double> z(int j) const { return {p(j), q(j)}; }
};

// 2n x 2n real matrix J acting on (p,q)-ordered tangent vectors of the
// complex chart, validated against J^2 = -1, invariance of omega and
// positivity of omega(v, Jv).
struct ComplexStructure {
  Eigen::MatrixXd J;

  explicit ComplexStructure(Eigen::MatrixXd j);
  static ComplexStructure standard(int dofs = 1);

  double square_defect() const;       // max |J^2 + 1|
  double compatibility_defect() const;  // max |omega(Je_i, Je_j) - omega(e_i, e_j)|
  bool positive() const;              // omega(v, Jv) > 0 for basis-random v
};

// Standard symplectic pairing on (q_1..q_n, p_1..p_n) tangent vectors,
// omega = sum dq_j ^ dp_j.
double symplectic_pairing(const Eigen::VectorXd& v, const Eigen::VectorXd& w);

// X_f at m: the first n entries are dq_j/dt, the last n are dp_j/dt.
Eigen::VectorXd hamiltonian_vector_field(const ModelManifold& M,
                                         const Observable& f,
                                         const PhasePoint& m);

Observable poisson_bracket(const Observable& f, const Observable& g);

// L = X_f . theta - f with theta = sum_j p_j dq_j.
Observable lagrangian_of(const Observable& f);

struct ActionResult {
  double action = 0.0;        // S = -int_0^t L(gamma(w)) dw, constant c = 0
  double error_estimate = 0.0;  // from step halving
  PhasePoint endpoint;
};

// Integrates the Hamiltonian flow of f from m0 with a fixed-step classical
// RK4 scheme and accumulates the action along the trajectory. Throws
// "flow-blowup" when the trajectory norm exceeds blowup_bound.
ActionResult generating_action(const ModelManifold& M, const Observable& f,
                               const PhasePoint& m0, double t, int steps,
                               double blowup_bound = 1e6);

// Moment map of the S^1 action with integer weights on C^n:
// Phi = -1/2 sum_j m_j (x_j^2 + y_j^2) with x = q, y = p.
double moment_map_s1(const std::vector<int>& weights, const PhasePoint& m);

// Max-norm defect of the defining identity d<Phi,xi> = xi_M . omega at m,
// with dPhi taken by central finite differences of step fd_step.
double moment_map_defect(const std::vector<int>& weights, const PhasePoint& m,
                         double fd_step = 1e-5);

}  // namespace gq
