#pragma once

#include <complex>
#include <string>
#include <vector>

namespace gq {

enum class SzegoModel { BargmannPlane, ProjectiveLine };

// Squared norms of the monomials z^j, j = 0..k, as sections of the k-th
// power on the projective line: integral of |z|^{2j} (1+|z|^2)^{-k} against
// the area form dx dy / (1+|z|^2)^2, computed by radial quadrature with the
// substitution u = |z|^2 / (1 + |z|^2).
std::vector<double> monomial_norms_p1(int k);

struct KernelDiagonal {
  std::string model;
  int k = 1;
  std::vector<std::pair<std::complex<double>, double>> samples;

  double max_value() const;
  double min_value() const;
  // max/min - 1; zero for exactly homogeneous models
  double homogeneity_defect() const;
};

// Diagonal of the degree-k kernel at the given chart points. The Bargmann
// plane uses the exponential series in closed form; the projective line
// uses the orthonormalized monomial basis.
KernelDiagonal kernel_diagonal(SzegoModel model, int k,
                               const std::vector<std::complex<double>>& points);

// integral of the diagonal over the projective line (trace of the
// projector); equals the section-space dimension k+1.
double p1_kernel_trace(int k);

struct AsymptoticFit {
  double a0 = 0.0;
  double a1 = 0.0;
  double n_hat = 0.0;
  double residual = 0.0;
};

// Fits value ~ a0 k^n + a1 k^{n-1} over a ladder of (k, value) pairs:
// log-log least squares for the exponent, then a linear fit in 1/k,
// iterated until the exponent stabilizes.
AsymptoticFit fit_expansion(const std::vector<std::pair<int, double>>& ladder,
                            double residual_threshold = 1e-3);

std::vector<int> default_k_ladder();

// Slope of the Bargmann-plane diagonal in k: the flat-model density used to
// normalize projective-line fits (1/pi in these conventions, measured, not
// assumed).
double bargmann_density_slope();

}  // namespace gq
