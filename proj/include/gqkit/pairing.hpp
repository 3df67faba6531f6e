#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gqkit/operators.hpp"
#include "gqkit/phase_space.hpp"

namespace gq {

// Normalized Hermite function h_j(x), unit scale, orthonormal on L^2(R,dx).
double hermite_function(int j, double x);
// h_0..h_N at x in one recurrence pass.
Eigen::VectorXd hermite_functions_upto(int N, double x);

// A section in the real (vertical) polarization: coefficients in the
// orthonormal Hermite basis of the given spec.
struct WaveFunction {
  BasisSpec basis;
  Eigen::VectorXcd coeffs;

  static WaveFunction basis_state(int j, const BasisSpec& b);
  double norm() const { return coeffs.norm(); }
  Complex evaluate(double x) const;
};

// A section in the holomorphic polarization: coefficients of the monomials
// z^j (not normalized), Fock inner product weight exp(-|z|^2/2).
struct HolomorphicState {
  Eigen::VectorXcd coeffs;

  static HolomorphicState monomial(int m, int N);
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  double norm_sq() const;
  double norm() const;
  Complex evaluate(Complex z) const;
};

struct PairingResult {
  Complex value{0.0, 0.0};
  double quadrature_error_estimate = 0.0;
};

// Momentum representation -> position representation,
// P psi(q) = (2 pi hbar)^{-1/2} int psi(p) exp(i p q / hbar) dp,
// evaluated by quadrature on a uniform grid and re-projected onto the
// Hermite basis. Requires the coefficient tail mass at truncation to be
// below 1e-8 of the total.
WaveFunction fourier_projection(const WaveFunction& psi_momentum);
// The adjoint-direction projection (kernel exp(-ipq/hbar)), used when the
// pairing arguments swap roles.
WaveFunction fourier_projection_inverse(const WaveFunction& psi_position);

// <<s1, s2>> = <s1, P s2>: s1 in the position representation, s2 in the
// momentum representation. Computed two ways (project-then-inner-product
// and the direct double integral); the reported estimate bounds their
// disagreement and the grid-refinement residual.
PairingResult bks_pair_fourier(const WaveFunction& s1, const WaveFunction& s2);

// Mixed BKS pairing <s1, P s2> with s2 holomorphic (Segal-Bargmann case).
PairingResult bks_pair_segal_bargmann(const WaveFunction& s1,
                                      const HolomorphicState& s2);

// Segal-Bargmann kernel K(q,w) = (C/sqrt(pi)) exp(-q^2/2 - i q w + w^2/4),
// C = pi^{1/4}. All dz dzbar integrals are read as Lebesgue dx dy, the
// convention under which the reproducing property and the ground-state
// image P(1) = pi^{-1/4} exp(-q^2/2) hold exactly.
Complex segal_bargmann_kernel(double q, Complex w);

// P(phi)(q) by the kernel integral over C with weight exp(-|w|^2/2),
// sampled at the given positions. nodes is the Gauss-Hermite tensor order.
std::vector<Complex> segal_bargmann_position_samples(const HolomorphicState& phi,
                                                     const std::vector<double>& qs,
                                                     int nodes = 128);

// Full transform into the Hermite basis of out_basis.
WaveFunction segal_bargmann_to_position(const HolomorphicState& phi,
                                        const BasisSpec& out_basis);

struct FockProjectionResult {
  HolomorphicState state;
  // The printed projection formula carries the conjugated kernel in both
  // directions; making the round trip P o P' a positive multiple of the
  // identity requires the unconjugated kernel here. True records that the
  // conjugation was applied.
  bool kernel_conjugated = true;
  double quadrature_error_estimate = 0.0;
};

// P'(psi)(w) = (1/2pi) int psi(q) K(q,w) dq with Taylor coefficients
// extracted at w = 0 by a circle average.
FockProjectionResult segal_bargmann_to_fock(const WaveFunction& psi, int n_out);

// Projected ground state between two Kahler polarizations.
struct BogoliubovResult {
  Complex det_factor{1.0, 0.0};       // [det (J1+J2)/2]^{-1/2}, principal branch
  Eigen::Matrix2cd lambda_form;       // lambda(v) = v^T lambda_form v
  Eigen::Matrix2d mixing;             // L = (J1+J2)^{-1} (J1-J2)
};

// Ground-state projection data: the projected state is
// det_factor * exp(lambda(z)/4 - z zbar / 4) with
// lambda(z) = 2 w(z, J1 L z) - 2 i w(z, L z), where w is the half-normalized
// symplectic form (dp^dq)/2 on (p,q) vectors; this normalization is the one
// under which the formula reproduces the orthogonal projection of the
// squeezed vacuum (checked against quadrature in the tests).
BogoliubovResult bogoliubov_ground_state(const ComplexStructure& J1,
                                         const ComplexStructure& J2);

// J conjugated by diag(e^s, e^{-s}); s = 0 gives the standard structure.
ComplexStructure squeezed_structure(double s);

// Coefficients of the projected ground state in the normalized monomial
// basis e_m = z^m / sqrt(2^m m!), m = 0..N. Requires lambda to be a
// holomorphic quadratic mu z^2 (true for compatible structures).
Eigen::VectorXcd bogoliubov_state_coefficients(const BogoliubovResult& r, int N);

}  // namespace gq
