#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gqkit/phase_space.hpp"

namespace gq {

// Hermitian metric data of the model line bundles: the scalar weight
// defining |s|^2 for the distinguished trivializing section, and the
// curvature coefficient c(z) the weight must reproduce through
// -d_z d_zbar log(weight), with the proportionality constant of each model
// taken from its own worked example:
//
//   flat plane      weight exp(-|z|^2/2)      c = 1/2
//   disk            weight (1-|z|^2)^2        c = 2/(1-|z|^2)^2
//   torus           weight exp(-pi h |z|^2)   c = pi h
//   projective line weight (1+|z|^2)^{-1}     c = 1/(1+|z|^2)^2
struct HermitianModelMetric {
  ModelManifold model;

  static HermitianModelMetric for_model(const ModelManifold& m);

  double weight(std::complex<double> z) const;
  double expected_curvature_coeff(std::complex<double> z) const;
  // Largest |z| (strictly) allowed for evaluation; infinity when unbounded.
  double domain_radius() const;
};

struct QuantizabilityReport {
  std::string cycle;          // which compact 2-cycle the numbers refer to
  double integral_value = 0;  // integral of omega (action units)
  double ratio = 0;           // integral / (2 pi hbar), or Im H for the torus
  bool is_integral = false;
  std::vector<double> nearest_admissible;  // e.g. radii n hbar / 2
  double tolerance = 1e-6;
};

// Integral of omega over the model's compact 2-cycle by tensor-product
// quadrature (Gauss-Legendre x trapezoid on the periodic factor).
// ProductSpheres integrates one factor, selected by `factor`.
double integrate_symplectic_form(const ModelManifold& M, int factor = 0);

// Degree integral of the projective line in the affine chart,
// (1/pi) * integral of (1 + x^2 + y^2)^{-2} dx dy.
double p1_degree();

// One report per compact 2-cycle (two for ProductSpheres).
std::vector<QuantizabilityReport> check_pc1(const ModelManifold& M,
                                            double tolerance = 1e-6);

// Torus integrality: Im H(l_i, l_j) in Z for all generator pairs.
bool check_torus_lattice(double h, std::complex<double> l1,
                         std::complex<double> l2, double tolerance = 1e-9);

struct CurvatureGrid {
  double x0 = -0.5, x1 = 0.5;
  double y0 = -0.5, y1 = 0.5;
  int nx = 20, ny = 20;
  double fd_step = 1e-3;  // second-derivative stencil step
};

// Max over the grid of |(-1/4) Laplacian log(weight) - expected coefficient|,
// the finite-difference check of the curvature condition.
double curvature_defect(const HermitianModelMetric& hm, const CurvatureGrid& grid);

struct Holonomy {
  double action = 0.0;               // loop integral of theta = sum p dq
  std::complex<double> phase{1, 0};  // exp(i action / hbar)
};

// Loop integral of theta = p dq over a closed polyline given as (q,p)
// vertices; closed means first vertex == last vertex (a single vertex
// counts as the degenerate loop). Segments are integrated exactly.
Holonomy holonomy_loop(const std::vector<Eigen::Vector2d>& loop, double hbar = 1.0);

// Closed polyline sampling of the oscillator circle q^2 + p^2 = 2E,
// oriented along the Hamiltonian flow of (p^2+q^2)/2.
std::vector<Eigen::Vector2d> oscillator_loop(double energy, int segments);

// Corrected Bohr-Sommerfeld levels for the oscillator geometry
// (loop integral of theta = 2 pi E): E_n = hbar (n + d), n = 0..n_max.
std::vector<double> bohr_sommerfeld_levels(double d, int n_max, double hbar = 1.0);

}  // namespace gq
