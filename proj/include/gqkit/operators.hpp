#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gqkit/observable.hpp"

namespace gq {

enum class BasisKind {
  FockMonomial,  // normalized z^j, j = 0..N, Fock weight exp(-|z|^2/2)
  Hermite,       // h_j(q/scale)/sqrt(scale), j = 0..N, L^2(R, dq)
};

struct BasisSpec {
  BasisKind kind = BasisKind::Hermite;
  int N = 8;          // truncation order, basis indices 0..N
  double hbar = 1.0;
  double mass = 1.0;
  double scale = 1.0;  // Hermite length scale, default sqrt(hbar)

  static BasisSpec fock(int N, double hbar = 1.0);
  static BasisSpec hermite(int N, double hbar = 1.0);
  int size() const { return N + 1; }
};

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BasisSpec basis;

  // max |A - A^dagger| over the interior block (last row/col dropped).
  double hermiticity_defect() const;
};

// Squared Fock norm of the monomial z^j under
// (f,g) = (1/2pi) int f conj(g) exp(-|z|^2/2) dx dy, i.e. 2^j j!.
double fock_monomial_norm_sq(int j);

// Matrix of Q(f) = -i hbar nabla_{X_f} + f on the requested basis.
//
// Fock basis: f must generate a flow preserving the holomorphic
// polarization, i.e. f = a z zbar + b1 z + b2 zbar + c in the z = p + iq
// chart; then Q(z zbar) = 2 hbar z d_z, Q(z) = z, Q(zbar) = 2 hbar d_z,
// Q(1) = 1. The oscillator (1/2) z zbar comes out as hbar diag(0..N).
//
// Hermite basis: f in span{1, q, p, q^2, p^2, qp}; position acts by
// multiplication, Q(p) = -i hbar d_q, quadratics are the standard exact
// ladder-operator matrices with qp symmetrized.
OperatorMatrix prequantum_operator(const Observable& f, const BasisSpec& basis);

// Half-form correction term hbar d_z d_zbar f = (hbar/4)(f_qq + f_pp);
// a constant observable for quadratic f.
Observable half_form_correction(const Observable& f, double hbar = 1.0);

// Q(f) plus the half-form correction. Requires the correction to be
// constant (f at most quadratic).
OperatorMatrix corrected_operator(const Observable& f, const BasisSpec& basis);

// Eigenvalues of the interior block (truncation boundary row/col dropped),
// ascending. Throws "non-hermitian-input" when the interior hermiticity
// defect exceeds the threshold.
std::vector<double> spectrum(const OperatorMatrix& A, double hermitian_tol = 1e-10);

// Max-norm of [Q(f),Q(g)] - i hbar Q({f,g}) on the interior block of size
// N - 1 - deg f - deg g (the Dirac condition with {q,p} = +1, under which
// [Q(q),Q(p)] = i hbar on the interior).
double dirac_defect(const Observable& f, const Observable& g, const BasisSpec& basis);

}  // namespace gq
