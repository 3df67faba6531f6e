#include "gqkit/prequant.hpp"

#include <cmath>
#include <limits>

#include "gqkit/errors.hpp"
#include "gqkit/quadrature.hpp"

namespace gq {

HermitianModelMetric HermitianModelMetric::for_model(const ModelManifold& m) {
  switch (m.kind) {
    case ManifoldKind::FlatComplex:
    case ManifoldKind::Disk:
    case ManifoldKind::Torus:
    case ManifoldKind::ProjectiveLine:
      return HermitianModelMetric{m};
    default:
      fail("unsupported-manifold",
           std::string("no model metric for ") + m.name());
  }
}

double HermitianModelMetric::weight(std::complex<double> z) const {
  const double r2 = std::norm(z);
  switch (model.kind) {
    case ManifoldKind::FlatComplex:
      return std::exp(-0.5 * r2);
    case ManifoldKind::Disk:
      require(r2 < 1.0, "stencil-out-of-domain", "disk weight needs |z| < 1");
      return (1.0 - r2) * (1.0 - r2);
    case ManifoldKind::Torus:
      return std::exp(-M_PI * model.hermitian_form * r2);
    case ManifoldKind::ProjectiveLine:
      return 1.0 / (1.0 + r2);
    default:
      fail("unsupported-manifold", "no weight for this model");
  }
}

double HermitianModelMetric::expected_curvature_coeff(std::complex<double> z) const {
  const double r2 = std::norm(z);
  switch (model.kind) {
    case ManifoldKind::FlatComplex:
      return 0.5;
    case ManifoldKind::Disk:
      return 2.0 / ((1.0 - r2) * (1.0 - r2));
    case ManifoldKind::Torus:
      return M_PI * model.hermitian_form;
    case ManifoldKind::ProjectiveLine:
      return 1.0 / ((1.0 + r2) * (1.0 + r2));
    default:
      fail("unsupported-manifold", "no curvature coefficient for this model");
  }
}

double HermitianModelMetric::domain_radius() const {
  return model.kind == ManifoldKind::Disk ? 1.0
                                          : std::numeric_limits<double>::infinity();
}

namespace {

double sphere_area_integral(double r) {
  // omega = r sin(phi) dphi ^ dtheta; Gauss-Legendre in phi, trapezoid on
  // the periodic theta direction (where the integrand is constant).
  const auto rule = gauss_legendre(64, 0.0, M_PI);
  double phi_part = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    phi_part += rule.weights[i] * std::sin(rule.nodes[i]);
  const int ntheta = 64;
  double theta_part = 0.0;
  for (int k = 0; k < ntheta; ++k) theta_part += (2.0 * M_PI / ntheta);
  return r * phi_part * theta_part / 1.0;
}

double fubini_study_integral() {
  // integral over C of (1+r^2)^{-2} dx dy via u = r^2/(1+r^2):
  // 2 pi * int_0^inf r (1+r^2)^{-2} dr = pi * int_0^1 du.
  const auto rule = gauss_legendre(32, 0.0, 1.0);
  double acc = 0.0;
  for (double w : rule.weights) acc += w;
  return M_PI * acc;
}

double torus_integral(const ModelManifold& M) {
  // omega = h dx ^ dy over the fundamental parallelogram; tensor
  // Gauss-Legendre in the lattice coordinates picks up the Jacobian
  // |Im(conj(l1) l2)|.
  const double area = std::abs(std::imag(std::conj(M.lattice1) * M.lattice2));
  const auto rule = gauss_legendre(8, 0.0, 1.0);
  double acc = 0.0;
  for (double wa : rule.weights)
    for (double wb : rule.weights) acc += wa * wb;
  return M.hermitian_form * area * acc;
}

}  // namespace

double integrate_symplectic_form(const ModelManifold& M, int factor) {
  switch (M.kind) {
    case ManifoldKind::Sphere:
      return sphere_area_integral(M.radius);
    case ManifoldKind::ProductSpheres:
      require(factor == 0 || factor == 1, "invalid-parameter",
              "product of spheres has factors 0 and 1");
      return sphere_area_integral(factor == 0 ? M.radius : M.radius2);
    case ManifoldKind::ProjectiveLine:
      return fubini_study_integral();
    case ManifoldKind::Torus:
      return torus_integral(M);
    default:
      fail("unsupported-manifold",
           std::string("no designated compact 2-cycle on ") + M.name());
  }
}

double p1_degree() { return fubini_study_integral() / M_PI; }

namespace {

QuantizabilityReport sphere_report(const std::string& cycle, double r,
                                   double hbar, double tol) {
  QuantizabilityReport rep;
  rep.cycle = cycle;
  rep.integral_value = sphere_area_integral(r);
  rep.ratio = rep.integral_value / (2.0 * M_PI * hbar);
  rep.is_integral = std::abs(rep.ratio - std::round(rep.ratio)) <= tol;
  rep.tolerance = tol;
  for (int n = 1; n <= 10; ++n) rep.nearest_admissible.push_back(0.5 * n * hbar);
  return rep;
}

}  // namespace

std::vector<QuantizabilityReport> check_pc1(const ModelManifold& M, double tol) {
  std::vector<QuantizabilityReport> out;
  switch (M.kind) {
    case ManifoldKind::Sphere:
      out.push_back(sphere_report("S2", M.radius, M.hbar, tol));
      break;
    case ManifoldKind::ProductSpheres:
      out.push_back(sphere_report("S2 x {pt}", M.radius, M.hbar, tol));
      out.push_back(sphere_report("{pt} x S2", M.radius2, M.hbar, tol));
      break;
    case ManifoldKind::ProjectiveLine: {
      QuantizabilityReport rep;
      rep.cycle = "P1";
      rep.integral_value = fubini_study_integral();
      // The FS form carries degree 1: the integral in units of pi.
      rep.ratio = rep.integral_value / M_PI;
      rep.is_integral = std::abs(rep.ratio - std::round(rep.ratio)) <= tol;
      rep.tolerance = tol;
      out.push_back(rep);
      break;
    }
    case ManifoldKind::Torus: {
      QuantizabilityReport rep;
      rep.cycle = "T2";
      rep.integral_value = torus_integral(M);
      // Integrality for the torus is Im H on lattice generators.
      rep.ratio = M.hermitian_form * std::imag(M.lattice1 * std::conj(M.lattice2));
      rep.is_integral = check_torus_lattice(M.hermitian_form, M.lattice1,
                                            M.lattice2, 1e-9);
      rep.tolerance = tol;
      out.push_back(rep);
      break;
    }
    default:
      fail("unsupported-manifold",
           std::string("PC1 needs a compact 2-cycle, got ") + M.name());
  }
  return out;
}

bool check_torus_lattice(double h, std::complex<double> l1,
                         std::complex<double> l2, double tolerance) {
  require(h > 0, "invalid-parameter", "hermitian form must be positive");
  const double area = std::abs(std::imag(std::conj(l1) * l2));
  require(area > 1e-12 * std::abs(l1) * std::abs(l2), "degenerate-lattice",
          "lattice generators must be R-linearly independent");
  const std::complex<double> gens[2] = {l1, l2};
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const double im = h * std::imag(a * std::conj(b));
      if (std::abs(im - std::round(im)) > tolerance) return false;
    }
  }
  return true;
}

double curvature_defect(const HermitianModelMetric& hm, const CurvatureGrid& grid) {
  require(grid.nx >= 2 && grid.ny >= 2, "invalid-parameter",
          "curvature grid needs at least 2 points per axis");
  require(grid.fd_step > 0, "invalid-parameter", "stencil step must be positive");
  const double h = grid.fd_step;
  const double rmax = hm.domain_radius();
  double defect = 0.0;
  for (int ix = 0; ix < grid.nx; ++ix) {
    for (int iy = 0; iy < grid.ny; ++iy) {
      const double x = grid.x0 + (grid.x1 - grid.x0) * ix / (grid.nx - 1.0);
      const double y = grid.y0 + (grid.y1 - grid.y0) * iy / (grid.ny - 1.0);
      const std::complex<double> z(x, y);
      require(std::abs(z) + 2.0 * h < rmax, "stencil-out-of-domain",
              "grid point too close to the chart boundary");
      auto lw = [&](double a, double b) {
        return std::log(hm.weight(std::complex<double>(a, b)));
      };
      // d_z d_zbar = (1/4)(d_xx + d_yy); curvature coefficient is the
      // negative of that applied to log(weight).
      const double lap = (lw(x + h, y) - 2.0 * lw(x, y) + lw(x - h, y)) / (h * h) +
                         (lw(x, y + h) - 2.0 * lw(x, y) + lw(x, y - h)) / (h * h);
      const double coeff = -0.25 * lap;
      defect = std::max(defect, std::abs(coeff - hm.expected_curvature_coeff(z)));
    }
  }
  return defect;
}

Holonomy holonomy_loop(const std::vector<Eigen::Vector2d>& loop, double hbar) {
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  require(!loop.empty(), "open-loop", "empty loop");
  if (loop.size() > 1) {
    const double scale = 1.0 + loop.front().norm() + loop.back().norm();
    require((loop.front() - loop.back()).norm() <= 1e-12 * scale, "open-loop",
            "loop must be closed (first vertex == last vertex)");
  }
  // theta = p dq integrates exactly on segments: trapezoid in p against dq.
  double action = 0.0;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    const double dq = loop[i + 1].x() - loop[i].x();
    action += 0.5 * (loop[i + 1].y() + loop[i].y()) * dq;
  }
  Holonomy h;
  h.action = action;
  h.phase = std::exp(std::complex<double>(0.0, action / hbar));
  return h;
}

std::vector<Eigen::Vector2d> oscillator_loop(double energy, int segments) {
  require(energy > 0, "invalid-parameter", "oscillator energy must be positive");
  require(segments >= 3, "invalid-parameter", "need at least 3 segments");
  const double R = std::sqrt(2.0 * energy);
  std::vector<Eigen::Vector2d> loop;
  loop.reserve(segments + 1);
  // Hamiltonian flow of (p^2+q^2)/2 from (q,p) = (R,0): q = R cos t,
  // p = -R sin t, which traverses the circle with positive p dq integral.
  for (int k = 0; k <= segments; ++k) {
    const double t = 2.0 * M_PI * k / segments;
    loop.emplace_back(R * std::cos(t), -R * std::sin(t));
  }
  loop.back() = loop.front();
  return loop;
}

std::vector<double> bohr_sommerfeld_levels(double d, int n_max, double hbar) {
  require(d >= 0.0 && d < 1.0, "invalid-parameter", "holonomy shift d in [0,1)");
  require(n_max >= 0, "invalid-parameter", "n_max must be non-negative");
  require(hbar > 0, "invalid-parameter", "hbar must be positive");
  std::vector<double> levels;
  levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) levels.push_back(hbar * (n + d));
  return levels;
}

}  // namespace gq
