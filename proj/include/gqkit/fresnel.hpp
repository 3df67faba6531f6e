#pragma once

#include <complex>
#include <vector>

namespace gq {

using Complex = std::complex<double>;

// Phase bookkeeping for oscillatory Gaussian integrals: the value is
// magnitude * exp(i c pi / 4) with c an integer mod 8.
struct MaslovPhase {
  int c = 0;
  double magnitude = 0.0;
  Complex value() const;
};

// int_{R^n} exp(i a p^2 / 2) d^n p = (2 pi / a)^{n/2} exp(i n pi / 4),
// a = t/(m hbar) > 0.
MaslovPhase fresnel_gaussian(int n, double a);

struct FresnelQuadratic {
  Complex value{0.0, 0.0};
  int c_total = 0;   // full phase index: value = |value| exp(i c_total pi/4)
  int c_tilde = 0;   // phase index of the (n-1)-dim plain factor
  double magnitude = 0.0;
};

// int_{R^n} p_j p_l exp(i a p^2/2) d^n p. Zero by parity for j != l; for
// j == l it is the 1-d quadratic-amplitude factor i sqrt(2 pi) a^{-3/2}
// exp(i pi/4) times the (n-1)-dim plain integral, so
// value = i * magnitude * exp(i (c_tilde + 1) pi/4) and c_total = c_tilde + 3.
FresnelQuadratic fresnel_quadratic(int n, double a, int j, int l);

// Gaussian test state amp * exp(i k q) exp(-q^2 / 2 sigma^2).
struct GaussianState {
  double k = 0.0;
  double sigma = 1.0;
  double amp = 1.0;

  // normalized as the N(0, sigma^2) density
  static GaussianState density(double k = 0.0, double sigma = 1.0);

  Complex evaluate(double q) const;
  Complex conj_evaluate(double q) const;
  Complex conj_second_derivative(double q) const;
};

struct SchrodingerCheck {
  std::vector<double> grid;
  std::vector<Complex> evolved;       // E_t on the grid, Maslov phase stripped
  std::vector<Complex> first_order;   // (E_t - conj(psi)) / t
  std::vector<Complex> target;        // -(i/hbar) H conj(psi), H = -(hbar^2/2m) d^2
  Complex zeroth{0.0, 0.0};           // <conj(psi), E_t> / |psi|^2, 1 + O(t)
  double residual = 0.0;              // max |first_order - target| on the grid
  Complex dropped_phase{1.0, 0.0};    // the stripped unit exp(-i c pi/4), c = 1
};

// Evaluates the time-evolution pairing integrand
//   B_t(q) = (t/2 pi m hbar)^{1/2} int conj(psi)(q + p t/m) exp(i p^2 t/2 m hbar) dp
// by quadrature on a uniform grid, strips the Maslov phase exp(i pi/4), and
// compares the first-order-in-t term against the free Schrodinger generator
// acting on the conjugated state (the expansion variable of the pairing).
SchrodingerCheck schrodinger_generator_check(const GaussianState& psi, double t,
                                             double mass = 1.0, double hbar = 1.0);

}  // namespace gq
