#include "gqkit/operators.hpp"

#include <cmath>

#include "gqkit/errors.hpp"
#include "gqkit/phase_space.hpp"

namespace gq {

BasisSpec BasisSpec::fock(int N, double hbar) {
  require(N >= 4, "invalid-parameter", "truncation order must be >= 4");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  BasisSpec b;
  b.kind = BasisKind::FockMonomial;
  b.N = N;
  b.hbar = hbar;
  return b;
}

BasisSpec BasisSpec::hermite(int N, double hbar) {
  require(N >= 4, "invalid-parameter", "truncation order must be >= 4");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  BasisSpec b;
  b.kind = BasisKind::Hermite;
  b.N = N;
  b.hbar = hbar;
  b.scale = std::sqrt(hbar);
  return b;
}

double OperatorMatrix::hermiticity_defect() const {
  const Eigen::Index n = entries.rows() - 1;
  if (n < 1) return 0.0;
  const Eigen::MatrixXcd interior = entries.topLeftCorner(n, n);
  return (interior - interior.adjoint()).cwiseAbs().maxCoeff();
}

double fock_monomial_norm_sq(int j) {
  require(j >= 0, "invalid-parameter", "monomial index must be >= 0");
  double v = 1.0;
  for (int k = 1; k <= j; ++k) v *= 2.0 * k;
  return v;  // 2^j j!
}

namespace {

OperatorMatrix fock_operator(const Observable& f, const BasisSpec& basis) {
  const auto zz = f.complex_chart_terms();
  Complex a{}, b1{}, b2{}, c{};
  for (const auto& [zpow, coeff] : zz) {
    const auto [kz, kzb] = zpow;
    if (kz == 0 && kzb == 0) c = coeff;
    else if (kz == 1 && kzb == 0) b1 = coeff;
    else if (kz == 0 && kzb == 1) b2 = coeff;
    else if (kz == 1 && kzb == 1) a = coeff;
    else
      fail("polarization-not-preserved",
           "flow of f does not preserve the holomorphic polarization; "
           "admissible f = a z zbar + b z + conj(b) zbar + c");
  }
  const int n = basis.size();
  const double hbar = basis.hbar;
  OperatorMatrix A{Eigen::MatrixXcd::Zero(n, n), basis};
  for (int j = 0; j < n; ++j) {
    A.entries(j, j) = 2.0 * hbar * a * double(j) + c;
    if (j >= 1) A.entries(j - 1, j) += 2.0 * hbar * b2 * std::sqrt(0.5 * j);
    if (j + 1 < n) A.entries(j + 1, j) += b1 * std::sqrt(2.0 * (j + 1));
  }
  return A;
}

OperatorMatrix hermite_operator(const Observable& f, const BasisSpec& basis) {
  require(f.dofs() == 1, "dimension-mismatch", "basis operators are 1-dof");
  Complex c0{}, cq{}, cp{}, cqq{}, cpp{}, cqp{};
  for (const auto& [e, coeff] : f.terms()) {
    const int a = e[0], b = e[1];
    if (a == 0 && b == 0) c0 = coeff;
    else if (a == 1 && b == 0) cq = coeff;
    else if (a == 0 && b == 1) cp = coeff;
    else if (a == 2 && b == 0) cqq = coeff;
    else if (a == 0 && b == 2) cpp = coeff;
    else if (a == 1 && b == 1) cqp = coeff;
    else
      fail("polarization-not-preserved",
           "Hermite-basis quantization covers span{1, q, p, q^2, p^2, qp}");
  }
  const int n = basis.size();
  const double s = basis.scale;
  const double hbar = basis.hbar;
  Eigen::MatrixXcd low = Eigen::MatrixXcd::Zero(n, n);   // annihilation
  for (int j = 1; j < n; ++j) low(j - 1, j) = std::sqrt(double(j));
  const Eigen::MatrixXcd raise = low.adjoint();
  Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) num(j, j) = double(j);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  // Exact single-operator matrices: products of truncations are avoided by
  // normal-ordered identities, so entries are those of the untruncated
  // operators restricted to the basis window.
  Eigen::MatrixXcd low2 = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 2; j < n; ++j) low2(j - 2, j) = std::sqrt(double(j) * (j - 1));
  const Eigen::MatrixXcd raise2 = low2.adjoint();

  const Complex I(0.0, 1.0);
  const Eigen::MatrixXcd qmat = s / std::sqrt(2.0) * (low + raise);
  const Eigen::MatrixXcd pmat = -I * hbar / (s * std::sqrt(2.0)) * (low - raise);
  const Eigen::MatrixXcd q2mat = s * s * 0.5 * (low2 + raise2 + 2.0 * num + id);
  const Eigen::MatrixXcd p2mat =
      (hbar / s) * (hbar / s) * 0.5 * (2.0 * num + id - low2 - raise2);
  const Eigen::MatrixXcd qpmat = -I * hbar * 0.5 * (low2 - raise2);

  OperatorMatrix A{Eigen::MatrixXcd::Zero(n, n), basis};
  A.entries = c0 * id + cq * qmat + cp * pmat + cqq * q2mat + cpp * p2mat + cqp * qpmat;
  return A;
}

}  // namespace

OperatorMatrix prequantum_operator(const Observable& f, const BasisSpec& basis) {
  require(f.dofs() == 1, "dimension-mismatch",
          "truncated-basis quantization is 1-dof");
  return basis.kind == BasisKind::FockMonomial ? fock_operator(f, basis)
                                               : hermite_operator(f, basis);
}

Observable half_form_correction(const Observable& f, double hbar) {
  Observable corr(f.dofs());
  for (int j = 0; j < f.dofs(); ++j)
    corr += f.dq(j).dq(j) + f.dp(j).dp(j);
  return Complex(hbar / 4.0) * corr;
}

OperatorMatrix corrected_operator(const Observable& f, const BasisSpec& basis) {
  OperatorMatrix A = prequantum_operator(f, basis);
  const Observable corr = half_form_correction(f, basis.hbar);
  require(corr.total_degree() == 0, "polarization-not-preserved",
          "half-form correction is only constant for quadratic f");
  const Complex c = corr.is_zero() ? Complex(0.0)
                                   : corr.terms().begin()->second;
  A.entries += c * Eigen::MatrixXcd::Identity(A.entries.rows(), A.entries.cols());
  return A;
}

std::vector<double> spectrum(const OperatorMatrix& A, double hermitian_tol) {
  const Eigen::Index n = A.entries.rows() - 1;
  require(n >= 1, "invalid-parameter", "matrix too small for an interior block");
  require(A.hermiticity_defect() <= hermitian_tol, "non-hermitian-input",
          "interior block is not hermitian within the threshold");
  const Eigen::MatrixXcd interior = A.entries.topLeftCorner(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(interior);
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return vals;
}

double dirac_defect(const Observable& f, const Observable& g, const BasisSpec& basis) {
  require(basis.kind == BasisKind::Hermite, "invalid-parameter",
          "the Dirac check is asserted on the Hermite representation");
  const OperatorMatrix Qf = prequantum_operator(f, basis);
  const OperatorMatrix Qg = prequantum_operator(g, basis);
  const OperatorMatrix Qb = prequantum_operator(poisson_bracket(f, g), basis);
  const Complex I(0.0, 1.0);
  const Eigen::MatrixXcd D = Qf.entries * Qg.entries - Qg.entries * Qf.entries -
                             I * basis.hbar * Qb.entries;
  const int m = std::max(1, basis.N - 1 - f.total_degree() - g.total_degree());
  return D.topLeftCorner(m, m).cwiseAbs().maxCoeff();
}

}  // namespace gq
