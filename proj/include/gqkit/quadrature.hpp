#pragma once

#include <functional>
#include <vector>

namespace gq {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1], exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);
// Gauss-Legendre mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Gauss-Hermite with weight exp(-x^2) on the real line.
QuadratureRule gauss_hermite(int n);

// sum_k w_k f(x_k)
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

}  // namespace gq
