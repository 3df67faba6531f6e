#include "gqkit/pairing.hpp"

#include <cmath>

#include "gqkit/errors.hpp"
#include "gqkit/quadrature.hpp"

namespace gq {

namespace {
const Complex I(0.0, 1.0);

struct UniformGrid {
  double lo, hi;
  int n;
  double step() const { return (hi - lo) / (n - 1); }
  double point(int k) const { return lo + k * step(); }
};

// Trapezoid weights are uniform except the endpoints; for integrands that
// vanish at the window boundary this is spectrally accurate.
template <typename F>
Complex trapz(const UniformGrid& g, F&& f) {
  Complex acc = 0.5 * (f(g.lo) + f(g.hi));
  for (int k = 1; k + 1 < g.n; ++k) acc += f(g.point(k));
  return acc * g.step();
}

UniformGrid hermite_window(const BasisSpec& b, int n = 2048) {
  const double L = b.scale * (std::sqrt(2.0 * b.N + 1.0) + 10.0);
  return UniformGrid{-L, L, n};
}

}  // namespace

double hermite_function(int j, double x) {
  return hermite_functions_upto(j, x)[j];
}

Eigen::VectorXd hermite_functions_upto(int N, double x) {
  Eigen::VectorXd h(N + 1);
  h[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (N >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int j = 1; j < N; ++j)
    h[j + 1] = std::sqrt(2.0 / (j + 1.0)) * x * h[j] -
               std::sqrt(j / (j + 1.0)) * h[j - 1];
  return h;
}

WaveFunction WaveFunction::basis_state(int j, const BasisSpec& b) {
  require(j >= 0 && j <= b.N, "invalid-parameter", "basis index out of range");
  WaveFunction w{b, Eigen::VectorXcd::Zero(b.size())};
  w.coeffs[j] = 1.0;
  return w;
}

Complex WaveFunction::evaluate(double x) const {
  const Eigen::VectorXd h = hermite_functions_upto(basis.N, x / basis.scale);
  Complex acc = 0.0;
  for (int j = 0; j <= basis.N; ++j) acc += coeffs[j] * h[j];
  return acc / std::sqrt(basis.scale);
}

HolomorphicState HolomorphicState::monomial(int m, int N) {
  require(m >= 0 && m <= N, "invalid-parameter", "monomial index out of range");
  HolomorphicState s{Eigen::VectorXcd::Zero(N + 1)};
  s.coeffs[m] = 1.0;
  return s;
}

double HolomorphicState::norm_sq() const {
  double acc = 0.0;
  for (int j = 0; j < coeffs.size(); ++j)
    acc += std::norm(coeffs[j]) * fock_monomial_norm_sq(j);
  return acc;
}

double HolomorphicState::norm() const { return std::sqrt(norm_sq()); }

Complex HolomorphicState::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * z + coeffs[j];
  return acc;
}

namespace {

void check_tail_mass(const WaveFunction& psi) {
  const double total = psi.coeffs.squaredNorm();
  if (total == 0.0) return;
  const int N = psi.basis.N;
  double tail = std::norm(psi.coeffs[N]);
  if (N >= 1) tail += std::norm(psi.coeffs[N - 1]);
  require(tail < 1e-8 * total, "tail-mass-violation",
          "coefficients do not decay at the truncation order");
}

// Oscillatory transform (2 pi hbar)^{-1/2} int psi(p) exp(sign i p q/hbar) dp
// sampled on the same uniform window.
std::vector<Complex> fourier_grid_transform(const WaveFunction& psi,
                                            const UniformGrid& g, double sign) {
  const double hbar = psi.basis.hbar;
  std::vector<Complex> in(g.n), out(g.n);
  for (int k = 0; k < g.n; ++k) in[k] = psi.evaluate(g.point(k));
  const double pref = 1.0 / std::sqrt(2.0 * M_PI * hbar);
  for (int iq = 0; iq < g.n; ++iq) {
    const double q = g.point(iq);
    // exp(i p q / hbar) advanced by a per-step rotation.
    const Complex rot = std::exp(I * (sign * g.step() * q / hbar));
    Complex phase = std::exp(I * (sign * g.lo * q / hbar));
    Complex acc = 0.0;
    for (int k = 0; k < g.n; ++k) {
      const double w = (k == 0 || k == g.n - 1) ? 0.5 : 1.0;
      acc += w * in[k] * phase;
      phase *= rot;
    }
    out[iq] = pref * acc * g.step();
  }
  return out;
}

WaveFunction project_to_hermite(const std::vector<Complex>& samples,
                                const UniformGrid& g, const BasisSpec& b) {
  WaveFunction out{b, Eigen::VectorXcd::Zero(b.size())};
  for (int k = 0; k < g.n; ++k) {
    const double w = (k == 0 || k == g.n - 1) ? 0.5 : 1.0;
    const Eigen::VectorXd h = hermite_functions_upto(b.N, g.point(k) / b.scale);
    const Complex v = w * samples[k] * g.step() / std::sqrt(b.scale);
    for (int j = 0; j <= b.N; ++j) out.coeffs[j] += h[j] * v;
  }
  return out;
}

WaveFunction fourier_apply(const WaveFunction& psi, double sign) {
  check_tail_mass(psi);
  const UniformGrid g = hermite_window(psi.basis);
  const auto samples = fourier_grid_transform(psi, g, sign);
  return project_to_hermite(samples, g, psi.basis);
}

}  // namespace

WaveFunction fourier_projection(const WaveFunction& psi_momentum) {
  return fourier_apply(psi_momentum, +1.0);
}

WaveFunction fourier_projection_inverse(const WaveFunction& psi_position) {
  return fourier_apply(psi_position, -1.0);
}

PairingResult bks_pair_fourier(const WaveFunction& s1, const WaveFunction& s2) {
  require(s1.basis.N == s2.basis.N && s1.basis.hbar == s2.basis.hbar,
          "invalid-parameter", "pairing needs compatible truncations");
  // Route A: project then take the l^2 inner product.
  const WaveFunction proj = fourier_projection(s2);
  const Complex route_a = s1.coeffs.dot(proj.coeffs);  // conjugates s1

  // Route B: the double integral, at two grid resolutions.
  auto direct = [&](int n) {
    const UniformGrid g{hermite_window(s1.basis, n)};
    const auto samples = fourier_grid_transform(s2, g, +1.0);
    Complex acc = 0.0;
    for (int k = 0; k < g.n; ++k) {
      const double w = (k == 0 || k == g.n - 1) ? 0.5 : 1.0;
      acc += w * std::conj(s1.evaluate(g.point(k))) * samples[k];
    }
    return acc * g.step();
  };
  const Complex coarse = direct(1024);
  const Complex fine = direct(2048);

  PairingResult r;
  r.value = route_a;
  r.quadrature_error_estimate =
      std::abs(fine - coarse) + std::abs(route_a - fine) + 1e-12;
  require(r.quadrature_error_estimate < 1e-6 * (1.0 + std::abs(route_a)),
          "quadrature-nonconvergence", "fourier pairing routes disagree");
  return r;
}

Complex segal_bargmann_kernel(double q, Complex w) {
  const double C = std::pow(M_PI, 0.25);
  return C / std::sqrt(M_PI) *
         std::exp(-0.5 * q * q - I * q * w + 0.25 * w * w);
}

namespace {

// Gauss-Hermite evaluation of the kernel integral. The (x,y) plane is
// rescaled so the Gaussian envelope exp(-x^2/4 - 3y^2/4) matches the
// exp(-u^2-v^2) weight, and the y line is shifted to the envelope peak
// 2q/3 contributed by the exp(q y) factor of exp(i q conj(w)):
//
//   P(phi)(q) = (C/sqrt(pi)) (1/2pi) (4/sqrt(3)) exp(-q^2/6)
//               * sum_{a,b} W_a W_b phi(w) exp(i (2q/3) x_a - i x_a y_b'/2)
//
// with w = x_a + i(2q/3) + i y_b'. Writing phi(w) in powers of
// wt = x_a + i y_b' separates the q dependence: the inner v sums become a
// phi-independent table T_j(a), and each q costs O(N * nodes).
struct SbNodeTable {
  int nodes;
  int max_power;
  std::vector<double> x;                 // scaled x nodes
  std::vector<double> wx;                // x weights
  std::vector<std::vector<Complex>> T;   // T[j][a]
};

SbNodeTable sb_node_table(int nodes, int max_power) {
  const auto rule = gauss_hermite(nodes);
  const double beta = 2.0 / std::sqrt(3.0);
  SbNodeTable tab;
  tab.nodes = nodes;
  tab.max_power = max_power;
  tab.x.resize(nodes);
  tab.wx.resize(nodes);
  tab.T.assign(max_power + 1, std::vector<Complex>(nodes, Complex(0, 0)));
  for (int a = 0; a < nodes; ++a) {
    tab.x[a] = 2.0 * rule.nodes[a];
    tab.wx[a] = rule.weights[a];
    for (int b = 0; b < nodes; ++b) {
      const double yb = beta * rule.nodes[b];
      const Complex wt(tab.x[a], yb);
      const Complex rot = std::exp(Complex(0.0, -0.5 * tab.x[a] * yb));
      Complex power(1.0, 0.0);
      for (int j = 0; j <= max_power; ++j) {
        tab.T[j][a] += rule.weights[b] * power * rot;
        power *= wt;
      }
    }
  }
  return tab;
}

std::vector<std::vector<double>> pascal_triangle(int n) {
  std::vector<std::vector<double>> b(n + 1);
  for (int m = 0; m <= n; ++m) {
    b[m].assign(m + 1, 1.0);
    for (int j = 1; j < m; ++j) b[m][j] = b[m - 1][j - 1] + b[m - 1][j];
  }
  return b;
}

}  // namespace

std::vector<Complex> segal_bargmann_position_samples(const HolomorphicState& phi,
                                                     const std::vector<double>& qs,
                                                     int nodes) {
  const int N = phi.order();
  const SbNodeTable tab = sb_node_table(nodes, N);
  const auto binom = pascal_triangle(N);
  const double pref =
      std::pow(M_PI, 0.25) / std::sqrt(M_PI) / (2.0 * M_PI) * 4.0 / std::sqrt(3.0);

  std::vector<Complex> out;
  out.reserve(qs.size());
  std::vector<Complex> A(N + 1);
  for (double q : qs) {
    const Complex iy0(0.0, 2.0 * q / 3.0);
    // regroup phi(wt + i y0) = sum_j A_j wt^j
    for (int j = 0; j <= N; ++j) {
      Complex acc(0.0, 0.0);
      Complex shift_power(1.0, 0.0);
      for (int m = j; m <= N; ++m) {
        acc += phi.coeffs[m] * binom[m][j] * shift_power;
        shift_power *= iy0;
      }
      A[j] = acc;
    }
    Complex total(0.0, 0.0);
    for (int a = 0; a < tab.nodes; ++a) {
      Complex inner(0.0, 0.0);
      for (int j = 0; j <= N; ++j) inner += A[j] * tab.T[j][a];
      total += tab.wx[a] * inner * std::exp(Complex(0.0, 2.0 * q / 3.0 * tab.x[a]));
    }
    out.push_back(pref * std::exp(-q * q / 6.0) * total);
  }
  return out;
}

WaveFunction segal_bargmann_to_position(const HolomorphicState& phi,
                                        const BasisSpec& out_basis) {
  require(out_basis.kind == BasisKind::Hermite, "invalid-parameter",
          "target basis must be the Hermite basis");
  const UniformGrid g = hermite_window(out_basis, 1024);
  std::vector<double> qs(g.n);
  for (int k = 0; k < g.n; ++k) qs[k] = g.point(k);
  const auto samples = segal_bargmann_position_samples(phi, qs, 96);
  return project_to_hermite(samples, g, out_basis);
}

PairingResult bks_pair_segal_bargmann(const WaveFunction& s1,
                                      const HolomorphicState& s2) {
  // Route A: transform then inner product in the Hermite basis.
  const WaveFunction proj = segal_bargmann_to_position(s2, s1.basis);
  const Complex route_a = s1.coeffs.dot(proj.coeffs);

  // Route B: integrate out q first, then the complex plane.
  auto direct = [&](int nodes) {
    const auto rule = gauss_hermite(nodes);
    const UniformGrid g = hermite_window(s1.basis, 1024);
    Complex acc = 0.0;
    for (int a = 0; a < nodes; ++a) {
      const double x = 2.0 * rule.nodes[a];
      for (int b = 0; b < nodes; ++b) {
        const double y = 2.0 / std::sqrt(3.0) * rule.nodes[b];
        const Complex w(x, y);
        // residual phase/amplitude of exp(conj(w)^2/4 - |w|^2/2) after the
        // envelope is folded into the Gauss-Hermite weight
        const Complex residual = std::exp(Complex(0.0, -0.5 * x * y));
        const Complex inner = trapz(g, [&](double q) {
          return std::conj(s1.evaluate(q)) * std::exp(I * q * std::conj(w)) *
                 std::exp(-0.5 * q * q);
        });
        acc += rule.weights[a] * rule.weights[b] * s2.evaluate(w) * residual * inner;
      }
    }
    const double C = std::pow(M_PI, 0.25);
    return (C / std::sqrt(M_PI)) / (2.0 * M_PI) * 4.0 / std::sqrt(3.0) * acc;
  };
  const Complex coarse = direct(48);
  const Complex fine = direct(96);

  PairingResult r;
  r.value = route_a;
  r.quadrature_error_estimate =
      std::abs(fine - coarse) + std::abs(route_a - fine) + 1e-12;
  require(r.quadrature_error_estimate < 1e-6 * (1.0 + std::abs(route_a)),
          "quadrature-nonconvergence", "mixed pairing routes disagree");
  return r;
}

FockProjectionResult segal_bargmann_to_fock(const WaveFunction& psi, int n_out) {
  require(n_out >= 0, "invalid-parameter", "output order must be >= 0");
  const double rho = 1.5;
  const int M = 256;

  auto coefficients = [&](int grid_n) {
    const UniformGrid g = hermite_window(psi.basis, grid_n);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_out + 1);
    for (int k = 0; k < M; ++k) {
      const double theta = 2.0 * M_PI * k / M;
      const Complex w = rho * std::exp(I * theta);
      // Unconjugated kernel; see FockProjectionResult::kernel_conjugated.
      const Complex gw = trapz(g, [&](double q) {
                           return psi.evaluate(q) * segal_bargmann_kernel(q, w);
                         }) /
                         (2.0 * M_PI);
      for (int m = 0; m <= n_out; ++m)
        c[m] += gw * std::exp(-I * (double(m) * theta)) /
                (double(M) * std::pow(rho, m));
    }
    return c;
  };

  const Eigen::VectorXcd fine = coefficients(2048);
  const Eigen::VectorXcd coarse = coefficients(1024);

  FockProjectionResult out;
  out.state = HolomorphicState{fine};
  out.kernel_conjugated = true;
  out.quadrature_error_estimate = (fine - coarse).cwiseAbs().maxCoeff() + 1e-14;
  require(out.quadrature_error_estimate < 1e-6 * (1.0 + fine.cwiseAbs().maxCoeff()),
          "quadrature-nonconvergence", "Taylor extraction did not converge");
  return out;
}

namespace {

// Half-normalized symplectic form (dp ^ dq)/2 on (p,q) vectors.
double omega_half(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return 0.5 * (u.x() * v.y() - u.y() * v.x());
}

// Symmetric matrix S with v^T S v = omega_half(v, B v).
Eigen::Matrix2d quadratic_form_of(const Eigen::Matrix2d& B) {
  Eigen::Matrix2d S;
  S(0, 0) = 0.5 * B(1, 0);
  S(1, 1) = -0.5 * B(0, 1);
  S(0, 1) = S(1, 0) = 0.25 * (B(1, 1) - B(0, 0));
  return S;
}

void validate_structure(const ComplexStructure& J, const char* which) {
  require(J.J.rows() == 2, "invalid-parameter",
          "the Bogoliubov projection is implemented for one degree of freedom");
  require(J.square_defect() <= 1e-10, "invalid-parameter",
          std::string(which) + ": J^2 != -1");
  require(J.compatibility_defect() <= 1e-10, "invalid-parameter",
          std::string(which) + ": J does not preserve omega");
  require(J.positive(), "invalid-parameter",
          std::string(which) + ": omega(v, Jv) is not positive");
}

}  // namespace

BogoliubovResult bogoliubov_ground_state(const ComplexStructure& J1,
                                         const ComplexStructure& J2) {
  validate_structure(J1, "J1");
  validate_structure(J2, "J2");
  const Eigen::Matrix2d sum = J1.J + J2.J;
  require(std::abs(sum.determinant()) >= 1e-12, "singular-sum",
          "J1 + J2 is numerically singular");

  BogoliubovResult r;
  r.mixing = sum.inverse() * (J1.J - J2.J);
  r.det_factor = std::pow(Complex((0.5 * sum).determinant(), 0.0), -0.5);
  const Eigen::Matrix2d re = 2.0 * quadratic_form_of(J1.J * r.mixing);
  const Eigen::Matrix2d im = -2.0 * quadratic_form_of(r.mixing);
  r.lambda_form = re.cast<Complex>() + I * im.cast<Complex>();
  return r;
}

ComplexStructure squeezed_structure(double s) {
  Eigen::Matrix2d S = Eigen::Matrix2d::Zero();
  S(0, 0) = std::exp(s);
  S(1, 1) = std::exp(-s);
  const Eigen::Matrix2d J = S * ComplexStructure::standard(1).J * S.inverse();
  return ComplexStructure(J);
}

Eigen::VectorXcd bogoliubov_state_coefficients(const BogoliubovResult& r, int N) {
  require(N >= 0, "invalid-parameter", "order must be >= 0");
  // lambda(v) = mu (p + iq)^2 for compatible structures; check and extract mu.
  const Complex mu = r.lambda_form(0, 0);
  Eigen::Matrix2cd expect;
  expect << mu, I * mu, I * mu, -mu;
  require((r.lambda_form - expect).cwiseAbs().maxCoeff() <=
              1e-9 * (1.0 + std::abs(mu)),
          "invalid-parameter", "lambda is not a holomorphic quadratic");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
  // det_factor * exp(mu z^2 / 4) expanded over e_m = z^m / sqrt(2^m m!).
  Complex term = r.det_factor;
  for (int k = 0; 2 * k <= N; ++k) {
    c[2 * k] = term * std::sqrt(fock_monomial_norm_sq(2 * k));
    term *= mu / 4.0 / double(k + 1);
  }
  return c;
}

}  // namespace gq
