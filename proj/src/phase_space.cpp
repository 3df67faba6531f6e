#include "gqkit/phase_space.hpp"

#include <cmath>

#include "gqkit/errors.hpp"

namespace gq {

ModelManifold ModelManifold::flat(int n, double hbar) {
  require(n >= 1, "invalid-parameter", "flat model needs n >= 1");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::FlatComplex;
  m.dim = n;
  m.hbar = hbar;
  return m;
}

ModelManifold ModelManifold::projective_line(double hbar) {
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::ProjectiveLine;
  m.hbar = hbar;
  return m;
}

ModelManifold ModelManifold::disk(double hbar) {
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::Disk;
  m.hbar = hbar;
  return m;
}

ModelManifold ModelManifold::torus(double h, std::complex<double> l1,
                                   std::complex<double> l2, double hbar) {
  require(h > 0, "invalid-parameter", "hermitian form must be positive");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  const double area = std::abs(std::imag(std::conj(l1) * l2));
  require(area > 1e-12 * std::abs(l1) * std::abs(l2), "degenerate-lattice",
          "lattice generators must be R-linearly independent");
  ModelManifold m;
  m.kind = ManifoldKind::Torus;
  m.hbar = hbar;
  m.hermitian_form = h;
  m.lattice1 = l1;
  m.lattice2 = l2;
  return m;
}

ModelManifold ModelManifold::sphere(double r, double hbar) {
  require(r > 0, "invalid-parameter", "sphere radius must be positive");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::Sphere;
  m.hbar = hbar;
  m.radius = r;
  return m;
}

ModelManifold ModelManifold::product_spheres(double r1, double r2, double hbar) {
  require(r1 > 0 && r2 > 0, "invalid-parameter", "radii must be positive");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::ProductSpheres;
  m.hbar = hbar;
  m.radius = r1;
  m.radius2 = r2;
  return m;
}

ModelManifold ModelManifold::cylinder(double hbar) {
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  ModelManifold m;
  m.kind = ManifoldKind::Cylinder;
  m.hbar = hbar;
  return m;
}

bool ModelManifold::has_global_darboux_chart() const {
  switch (kind) {
    case ManifoldKind::FlatComplex:
    case ManifoldKind::Disk:
    case ManifoldKind::Torus:
    case ManifoldKind::Cylinder:
      return true;
    case ManifoldKind::Sphere:
    case ManifoldKind::ProjectiveLine:
    case ManifoldKind::ProductSpheres:
      return false;
  }
  return false;
}

const char* ModelManifold::name() const {
  switch (kind) {
    case ManifoldKind::FlatComplex: return "flat";
    case ManifoldKind::ProjectiveLine: return "projective-line";
    case ManifoldKind::Disk: return "disk";
    case ManifoldKind::Torus: return "torus";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::ProductSpheres: return "product-spheres";
    case ManifoldKind::Cylinder: return "cylinder";
  }
  return "unknown";
}

PhasePoint::PhasePoint(Eigen::VectorXd c) : coords(std::move(c)) {
  require(coords.size() > 0 && coords.size() % 2 == 0, "dimension-mismatch",
          "phase point needs an even number of coordinates");
  require(coords.allFinite(), "invalid-parameter", "phase point must be finite");
}

PhasePoint PhasePoint::qp(double q, double p) {
  Eigen::VectorXd c(2);
  c << q, p;
  return PhasePoint(c);
}

ComplexStructure::ComplexStructure(Eigen::MatrixXd j) : J(std::move(j)) {
  require(J.rows() == J.cols() && J.rows() % 2 == 0, "dimension-mismatch",
          "complex structure must be a 2n x 2n matrix");
}

ComplexStructure ComplexStructure::standard(int dofs) {
  // Multiplication by i on z = p + i q in (p,q)-ordered blocks.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * dofs, 2 * dofs);
  for (int j = 0; j < dofs; ++j) {
    J(2 * j, 2 * j + 1) = -1.0;
    J(2 * j + 1, 2 * j) = 1.0;
  }
  return ComplexStructure(J);
}

namespace {
// omega = dp ^ dq on (p,q)-ordered pairs, the chart the complex structures
// act on (z = p + i q).
double omega_pq(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j + 1 < v.size(); j += 2)
    acc += v[j] * w[j + 1] - v[j + 1] * w[j];
  return acc;
}
}  // namespace

double ComplexStructure::square_defect() const {
  const Eigen::MatrixXd s = J * J + Eigen::MatrixXd::Identity(J.rows(), J.cols());
  return s.cwiseAbs().maxCoeff();
}

double ComplexStructure::compatibility_defect() const {
  const Eigen::Index n = J.rows();
  double defect = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      defect = std::max(defect, std::abs(omega_pq(J * ei, J * ej) - omega_pq(ei, ej)));
    }
  }
  return defect;
}

bool ComplexStructure::positive() const {
  const Eigen::Index n = J.rows();
  // g(v,v) = omega(v, Jv) is a quadratic form; positivity on a basis of
  // unit vectors plus their sums is equivalent to positive definiteness
  // of the symmetrized matrix, which we check via eigenvalues.
  Eigen::MatrixXd G(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      G(i, j) = omega_pq(Eigen::VectorXd::Unit(n, i), J * Eigen::VectorXd::Unit(n, j));
  const Eigen::MatrixXd S = 0.5 * (G + G.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  return es.eigenvalues().minCoeff() > 0.0;
}

double symplectic_pairing(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  require(v.size() == w.size() && v.size() % 2 == 0, "dimension-mismatch",
          "symplectic pairing needs matching even-dimensional vectors");
  const Eigen::Index n = v.size() / 2;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    acc += v[j] * w[n + j] - v[n + j] * w[j];
  return acc;
}

Eigen::VectorXd hamiltonian_vector_field(const ModelManifold& M,
                                         const Observable& f,
                                         const PhasePoint& m) {
  require(M.has_global_darboux_chart(), "unsupported-manifold",
          std::string("no global Darboux chart on ") + M.name());
  const int n = f.dofs();
  require(m.dofs() == n, "dimension-mismatch",
          "phase point and observable dimension differ");
  Eigen::VectorXd X(2 * n);
  for (int j = 0; j < n; ++j) {
    X[j] = f.dp(j).eval_real(m.coords);
    X[n + j] = -f.dq(j).eval_real(m.coords);
  }
  return X;
}

Observable poisson_bracket(const Observable& f, const Observable& g) {
  require(f.dofs() == g.dofs(), "dimension-mismatch",
          "poisson bracket needs equal dofs");
  Observable out(f.dofs());
  for (int j = 0; j < f.dofs(); ++j) {
    // {f,g} = X_g(f) = sum_j dg/dp_j df/dq_j - dg/dq_j df/dp_j
    out += g.dp(j) * f.dq(j) - g.dq(j) * f.dp(j);
  }
  return out;
}

Observable lagrangian_of(const Observable& f) {
  Observable out(f.dofs());
  for (int j = 0; j < f.dofs(); ++j) out += Observable::p(j, f.dofs()) * f.dp(j);
  out -= f;
  return out;
}

ActionResult generating_action(const ModelManifold& M, const Observable& f,
                               const PhasePoint& m0, double t, int steps,
                               double blowup_bound) {
  require(M.has_global_darboux_chart(), "unsupported-manifold",
          std::string("flow integration needs a global chart, got ") + M.name());
  require(steps >= 16, "invalid-parameter", "need at least 16 integration steps");
  const int n = f.dofs();
  require(m0.dofs() == n, "dimension-mismatch", "start point dimension mismatch");

  const Observable lag = lagrangian_of(f);
  // State = (coords, action); dot(coords) = X_f, dot(action) = -L.
  auto rhs = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd d(2 * n + 1);
    const Eigen::VectorXd x = y.head(2 * n);
    for (int j = 0; j < n; ++j) {
      d[j] = f.dp(j).eval_real(x);
      d[n + j] = -f.dq(j).eval_real(x);
    }
    d[2 * n] = -lag.eval_real(x);
    return d;
  };

  auto integrate = [&](int nsteps) {
    Eigen::VectorXd y(2 * n + 1);
    y.head(2 * n) = m0.coords;
    y[2 * n] = 0.0;
    const double h = t / nsteps;
    for (int s = 0; s < nsteps; ++s) {
      const Eigen::VectorXd k1 = rhs(y);
      const Eigen::VectorXd k2 = rhs(y + 0.5 * h * k1);
      const Eigen::VectorXd k3 = rhs(y + 0.5 * h * k2);
      const Eigen::VectorXd k4 = rhs(y + h * k3);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      require(y.head(2 * n).norm() <= blowup_bound, "flow-blowup",
              "trajectory norm exceeded the configured bound");
    }
    return y;
  };

  const Eigen::VectorXd fine = integrate(steps);
  const Eigen::VectorXd coarse = integrate(std::max(16, steps / 2));
  ActionResult r;
  r.action = fine[2 * n];
  r.error_estimate = std::abs(fine[2 * n] - coarse[2 * n]);
  r.endpoint = PhasePoint(fine.head(2 * n).eval());
  return r;
}

double moment_map_s1(const std::vector<int>& weights, const PhasePoint& m) {
  const int n = static_cast<int>(weights.size());
  require(m.dofs() == n, "dimension-mismatch",
          "weights and phase point dimension differ");
  double phi = 0.0;
  for (int j = 0; j < n; ++j)
    phi += weights[j] * (m.q(j) * m.q(j) + m.p(j) * m.p(j));
  return -0.5 * phi;
}

double moment_map_defect(const std::vector<int>& weights, const PhasePoint& m,
                         double fd_step) {
  const int n = static_cast<int>(weights.size());
  require(m.dofs() == n, "dimension-mismatch",
          "weights and phase point dimension differ");
  // Generator of the S^1 action: xi_M = sum_j m_j (x_j d_{y_j} - y_j d_{x_j})
  // with x = q, y = p. The identity dPhi = xi_M . omega is checked entry-wise
  // on the coordinate basis with central differences for dPhi.
  Eigen::VectorXd xi(2 * n);
  for (int j = 0; j < n; ++j) {
    xi[j] = -weights[j] * m.p(j);      // d_{x_j} component
    xi[n + j] = weights[j] * m.q(j);   // d_{y_j} component
  }
  double defect = 0.0;
  for (int k = 0; k < 2 * n; ++k) {
    Eigen::VectorXd up = m.coords, dn = m.coords;
    up[k] += fd_step;
    dn[k] -= fd_step;
    const double dphi =
        (moment_map_s1(weights, PhasePoint(up)) - moment_map_s1(weights, PhasePoint(dn))) /
        (2.0 * fd_step);
    const double contraction = symplectic_pairing(xi, Eigen::VectorXd::Unit(2 * n, k));
    defect = std::max(defect, std::abs(dphi - contraction));
  }
  return defect;
}

}  // namespace gq
