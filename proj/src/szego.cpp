#include "gqkit/szego.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gqkit/errors.hpp"
#include "gqkit/quadrature.hpp"

namespace gq {

std::vector<double> monomial_norms_p1(int k) {
  require(k >= 1 && k <= 128, "invalid-parameter", "power k must lie in [1, 128]");
  // After u = |z|^2/(1+|z|^2) the radial integral becomes
  // pi * int_0^1 u^j (1-u)^{k-j} du, a polynomial Gauss-Legendre handles
  // exactly; two node counts guard against a misconfigured rule.
  const auto rule = gauss_legendre(k / 2 + 8, 0.0, 1.0);
  const auto check = gauss_legendre(k / 2 + 12, 0.0, 1.0);
  std::vector<double> norms(k + 1);
  for (int j = 0; j <= k; ++j) {
    auto f = [&](double u) {
      return std::pow(u, j) * std::pow(1.0 - u, k - j);
    };
    const double a = M_PI * integrate(rule, f);
    const double b = M_PI * integrate(check, f);
    require(std::abs(a - b) <= 1e-12 * (std::abs(a) + 1.0),
            "quadrature-nonconvergence", "norm quadrature did not stabilize");
    norms[j] = b;
  }
  return norms;
}

double KernelDiagonal::max_value() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) m = std::max(m, s.second);
  return m;
}

double KernelDiagonal::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) m = std::min(m, s.second);
  return m;
}

double KernelDiagonal::homogeneity_defect() const {
  return max_value() / min_value() - 1.0;
}

namespace {

double p1_diagonal(int k, std::complex<double> z, const std::vector<double>& norms) {
  // (1+|z|^2)^{-k} sum_j |z|^{2j} / N_j in log space.
  const double r2 = std::norm(z);
  const double base = -double(k) * std::log1p(r2);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(k + 1);
  for (int j = 0; j <= k; ++j) {
    if (r2 == 0.0 && j > 0) {
      logs[j] = -std::numeric_limits<double>::infinity();
      continue;
    }
    logs[j] = base + j * std::log(r2 == 0.0 ? 1.0 : r2) - std::log(norms[j]);
    best = std::max(best, logs[j]);
  }
  if (r2 == 0.0) best = base - std::log(norms[0]);
  double acc = 0.0;
  for (int j = 0; j <= k; ++j)
    if (std::isfinite(logs[j])) acc += std::exp(logs[j] - best);
  return std::exp(best) * acc;
}

double bargmann_diagonal(int k, std::complex<double> z) {
  // (k/pi) exp(-k|z|^2) sum_{j<=J} (k|z|^2)^j / j!, J far past the Poisson
  // bulk so the tail is below roundoff.
  const double lam = k * std::norm(z);
  const int J = static_cast<int>(lam + 12.0 * std::sqrt(lam + 1.0) + 40.0);
  double log_term = -lam;  // log of exp(-lam) * lam^0/0!
  double acc = 0.0;
  for (int j = 0; j <= J; ++j) {
    acc += std::exp(log_term);
    log_term += std::log(lam) - std::log1p(double(j));
    if (lam == 0.0) break;
  }
  return k / M_PI * acc;
}

}  // namespace

KernelDiagonal kernel_diagonal(SzegoModel model, int k,
                               const std::vector<std::complex<double>>& points) {
  require(k >= 1, "invalid-parameter", "power k must be >= 1");
  KernelDiagonal out;
  out.k = k;
  out.model = model == SzegoModel::BargmannPlane ? "bargmann-plane"
                                                 : "projective-line";
  if (model == SzegoModel::ProjectiveLine) {
    const auto norms = monomial_norms_p1(k);
    for (auto z : points) out.samples.emplace_back(z, p1_diagonal(k, z, norms));
  } else {
    for (auto z : points) out.samples.emplace_back(z, bargmann_diagonal(k, z));
  }
  return out;
}

double p1_kernel_trace(int k) {
  require(k >= 1, "invalid-parameter", "power k must be >= 1");
  const auto norms = monomial_norms_p1(k);
  // integral of the diagonal against the area form, radially via
  // u = r^2/(1+r^2): trace = pi * int_0^1 diag(u) du in the u chart where
  // diag depends on r^2 = u/(1-u).
  const auto rule = gauss_legendre(k + 16, 0.0, 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i];
    const double r2 = u / (1.0 - u);
    acc += rule.weights[i] *
           p1_diagonal(k, std::sqrt(r2), norms);
  }
  return M_PI * acc;
}

AsymptoticFit fit_expansion(const std::vector<std::pair<int, double>>& ladder,
                            double residual_threshold) {
  require(ladder.size() >= 2, "invalid-parameter", "need at least two ladder points");
  for (const auto& [k, v] : ladder)
    require(k >= 1 && v > 0.0, "invalid-parameter",
            "ladder entries must have k >= 1 and positive values");

  const auto slope_loglog = [&](const std::vector<double>& vals) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(ladder.size());
    for (int i = 0; i < n; ++i) {
      const double x = std::log(double(ladder[i].first));
      const double y = std::log(vals[i]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
  };

  std::vector<double> raw(ladder.size());
  for (std::size_t i = 0; i < ladder.size(); ++i) raw[i] = ladder[i].second;

  // Separable least squares: for fixed exponent n the model is linear in
  // (a0, a1); the exponent minimizes the projected residual, located by a
  // golden-section search bracketing the log-log slope.
  const auto linear_fit = [&](double n_hat, double& a0, double& a1) {
    double s00 = 0, s01 = 0, s11 = 0, b0 = 0, b1 = 0;
    for (const auto& [k, v] : ladder) {
      const double f0 = std::pow(double(k), n_hat);
      const double f1 = std::pow(double(k), n_hat - 1.0);
      s00 += f0 * f0; s01 += f0 * f1; s11 += f1 * f1;
      b0 += f0 * v; b1 += f1 * v;
    }
    const double det = s00 * s11 - s01 * s01;
    if (std::abs(det) < 1e-14 * s00 * s11) {
      a0 = b0 / s00;
      a1 = 0.0;
      return;
    }
    a0 = (s11 * b0 - s01 * b1) / det;
    a1 = (s00 * b1 - s01 * b0) / det;
  };
  const auto sse_at = [&](double n_hat) {
    double a0, a1, ss = 0;
    linear_fit(n_hat, a0, a1);
    for (const auto& [k, v] : ladder) {
      const double m = a0 * std::pow(double(k), n_hat) +
                       a1 * std::pow(double(k), n_hat - 1.0);
      ss += (v - m) * (v - m);
    }
    return ss;
  };

  AsymptoticFit fit;
  const double slope0 = slope_loglog(raw);
  double lo = slope0 - 0.6, hi = slope0 + 0.6;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = sse_at(x1), f2 = sse_at(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-11; ++iter) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = sse_at(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = sse_at(x2);
    }
  }
  fit.n_hat = 0.5 * (lo + hi);
  linear_fit(fit.n_hat, fit.a0, fit.a1);

  double ss = 0.0, scale = 0.0;
  for (const auto& [k, v] : ladder) {
    const double model = fit.a0 * std::pow(double(k), fit.n_hat) +
                         fit.a1 * std::pow(double(k), fit.n_hat - 1.0);
    ss += (v - model) * (v - model);
    scale = std::max(scale, std::abs(v));
  }
  fit.residual = std::sqrt(ss / ladder.size());
  require(fit.residual <= residual_threshold * (scale + 1.0),
          "ill-conditioned-fit", "asymptotic fit residual above threshold");
  return fit;
}

std::vector<int> default_k_ladder() { return {8, 12, 16, 24, 32, 48, 64}; }

double bargmann_density_slope() {
  std::vector<std::pair<int, double>> ladder;
  for (int k : default_k_ladder()) {
    const auto diag = kernel_diagonal(SzegoModel::BargmannPlane, k, {{0.4, 0.3}});
    ladder.emplace_back(k, diag.samples.front().second);
  }
  return fit_expansion(ladder).a0;
}

}  // namespace gq
