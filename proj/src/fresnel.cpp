#include "gqkit/fresnel.hpp"

#include <cmath>

#include "gqkit/errors.hpp"

namespace gq {

namespace {
const Complex I(0.0, 1.0);
Complex unit_phase(int c) {
  return std::exp(I * (M_PI * 0.25 * double(((c % 8) + 8) % 8)));
}
}  // namespace

Complex MaslovPhase::value() const { return magnitude * unit_phase(c); }

MaslovPhase fresnel_gaussian(int n, double a) {
  require(n >= 1, "invalid-parameter", "dimension must be >= 1");
  require(a > 0, "invalid-parameter", "the coefficient a must be positive");
  MaslovPhase ph;
  ph.c = n % 8;
  ph.magnitude = std::pow(2.0 * M_PI / a, 0.5 * n);
  return ph;
}

FresnelQuadratic fresnel_quadratic(int n, double a, int j, int l) {
  require(n >= 1, "invalid-parameter", "dimension must be >= 1");
  require(a > 0, "invalid-parameter", "the coefficient a must be positive");
  require(j >= 0 && j < n && l >= 0 && l < n, "invalid-parameter",
          "component indices must lie in [0, n)");
  FresnelQuadratic out;
  if (j != l) return out;  // odd integrand in p_j and p_l
  const Complex quad1d = I * std::sqrt(2.0 * M_PI) * std::pow(a, -1.5) *
                         unit_phase(1);
  out.c_tilde = (n - 1) % 8;
  Complex plain(1.0, 0.0);
  if (n > 1) plain = fresnel_gaussian(n - 1, a).value();
  out.value = quad1d * plain;
  out.magnitude = std::abs(out.value);
  out.c_total = (n + 2) % 8;
  return out;
}

GaussianState GaussianState::density(double k, double sigma) {
  GaussianState g;
  g.k = k;
  g.sigma = sigma;
  g.amp = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
  return g;
}

Complex GaussianState::evaluate(double q) const {
  return amp * std::exp(I * (k * q) - 0.5 * q * q / (sigma * sigma));
}

Complex GaussianState::conj_evaluate(double q) const {
  return std::conj(evaluate(q));
}

Complex GaussianState::conj_second_derivative(double q) const {
  const Complex b = -I * k - q / (sigma * sigma);
  return (b * b - 1.0 / (sigma * sigma)) * conj_evaluate(q);
}

SchrodingerCheck schrodinger_generator_check(const GaussianState& psi, double t,
                                             double mass, double hbar) {
  require(t > 0.0 && t <= 0.1, "invalid-parameter", "t must lie in (0, 0.1]");
  require(mass > 0 && hbar > 0, "invalid-parameter",
          "mass and hbar must be positive");

  // Output grid: uniform, half-width 8 standard deviations, 2^12 points.
  const int nq = 1 << 12;
  const double Lq = 8.0 * psi.sigma;
  SchrodingerCheck out;
  out.grid.resize(nq);
  for (int i = 0; i < nq; ++i) out.grid[i] = -Lq + 2.0 * Lq * i / (nq - 1);

  // Substituting u = q + p t/m turns the pairing integral into
  //   B_t(q) = (m/2 pi hbar t)^{1/2} exp(i m q^2/2 hbar t)
  //     * int [conj(psi)(u) exp(i m u^2/2 hbar t)] exp(-i (m q/hbar t) u) du,
  // a windowed transform of a chirped Gaussian. The uniform step must keep
  // the chirp band plus the probe frequency and the state bandwidth below
  // the grid Nyquist frequency; conj(psi) carries the tail-mass bound on
  // the window by construction (8.5 sigma).
  const double Lu = 8.5 * psi.sigma;
  const double chirp_band = mass * Lu / (hbar * t);
  const double probe_band = mass * Lq / (hbar * t);
  const double state_band = 8.0 / psi.sigma + std::abs(psi.k);
  const double bandwidth = chirp_band + probe_band + 2.0 * state_band + 32.0;
  int nu = 1 << 12;
  while (M_PI * nu / (2.0 * Lu) < bandwidth && nu < (1 << 23)) nu <<= 1;
  require(M_PI * nu / (2.0 * Lu) >= bandwidth, "quadrature-nonconvergence",
          "pairing quadrature grid would be too fine; increase t");

  const double du = 2.0 * Lu / (nu - 1);
  std::vector<Complex> chirped(nu);
  for (int kk = 0; kk < nu; ++kk) {
    const double u = -Lu + kk * du;
    const double wt = (kk == 0 || kk == nu - 1) ? 0.5 : 1.0;
    chirped[kk] = wt * psi.conj_evaluate(u) *
                  std::exp(I * (mass * u * u / (2.0 * hbar * t))) * du;
  }

  const double pref = std::sqrt(mass / (2.0 * M_PI * hbar * t));
  out.dropped_phase = unit_phase(-1);  // exp(-i pi/4), n = 1

  out.evolved.resize(nq);
  for (int i = 0; i < nq; ++i) {
    const double q = out.grid[i];
    const double xi = mass * q / (hbar * t);
    // exp(-i xi u) advanced by a per-step rotation along the u grid.
    const Complex rot = std::exp(-I * (xi * du));
    Complex phase = std::exp(-I * (xi * (-Lu)));
    Complex acc = 0.0;
    for (int kk = 0; kk < nu; ++kk) {
      acc += chirped[kk] * phase;
      phase *= rot;
    }
    const Complex bt = pref * std::exp(I * (mass * q * q / (2.0 * hbar * t))) * acc;
    out.evolved[i] = bt * out.dropped_phase;
  }

  out.first_order.resize(nq);
  out.target.resize(nq);
  Complex overlap = 0.0;
  double norm2 = 0.0;
  double residual = 0.0;
  for (int i = 0; i < nq; ++i) {
    const double q = out.grid[i];
    const Complex psibar = psi.conj_evaluate(q);
    out.first_order[i] = (out.evolved[i] - psibar) / t;
    // -(i/hbar) H psibar with H = -(hbar^2/2m) d^2
    out.target[i] = I * hbar / (2.0 * mass) * psi.conj_second_derivative(q);
    residual = std::max(residual, std::abs(out.first_order[i] - out.target[i]));
    overlap += std::conj(psibar) * out.evolved[i];
    norm2 += std::norm(psibar);
  }
  out.zeroth = overlap / norm2;
  out.residual = residual;
  return out;
}

}  // namespace gq
