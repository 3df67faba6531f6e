#include "gqkit/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "gqkit/errors.hpp"

namespace gq {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the
// orthogonal-polynomial recurrence, weights come from the first components
// of the eigenvectors scaled by the zeroth moment mu0.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& subdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = diag[i];
    if (i + 1 < n) {
      J(i, i + 1) = subdiag[i];
      J(i + 1, i) = subdiag[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  require(n >= 1, "invalid-parameter", "quadrature order must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  QuadratureRule base = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    base.nodes[i] = mid + half * base.nodes[i];
    base.weights[i] *= half;
  }
  return base;
}

QuadratureRule gauss_hermite(int n) {
  require(n >= 1, "invalid-parameter", "quadrature order must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  return golub_welsch(diag, sub, std::sqrt(M_PI));
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

}  // namespace gq
