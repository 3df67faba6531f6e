#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gq {

using Complex = std::complex<double>;

// A polynomial classical observable on R^{2n} in Darboux coordinates
// (q_1..q_n, p_1..p_n), with complex coefficients. Exponent vectors store
// the q exponents first, then the p exponents. Terms with coefficient
// exactly zero are pruned, so equality of term maps is exact equality of
// polynomials.
class Observable {
 public:
  using Exponents = std::vector<std::uint16_t>;

  Observable() : dofs_(1) {}
  explicit Observable(int dofs) : dofs_(dofs) {}

  static Observable constant(Complex c, int dofs = 1);
  static Observable q(int j = 0, int dofs = 1);
  static Observable p(int j = 0, int dofs = 1);
  // Single monomial  coeff * prod q_j^{qe[j]} p_j^{pe[j]}.
  static Observable monomial(Complex coeff, const Exponents& q_exp,
                             const Exponents& p_exp);

  int dofs() const { return dofs_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Complex>& terms() const { return terms_; }

  Complex coefficient(const Exponents& q_exp, const Exponents& p_exp) const;

  Observable& operator+=(const Observable& rhs);
  Observable& operator-=(const Observable& rhs);
  Observable& operator*=(const Observable& rhs);
  Observable& operator*=(Complex s);
  friend Observable operator+(Observable a, const Observable& b) { return a += b; }
  friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
  friend Observable operator*(Observable a, const Observable& b) { return a *= b; }
  friend Observable operator*(Complex s, Observable a) { return a *= s; }
  friend Observable operator*(Observable a, Complex s) { return a *= s; }
  friend Observable operator-(Observable a) { return a *= Complex(-1.0); }

  bool operator==(const Observable& rhs) const;

  Observable dq(int j) const;  // partial derivative in q_j
  Observable dp(int j) const;  // partial derivative in p_j
  Observable conjugated() const;

  // Evaluate at a phase point given as (q_1..q_n, p_1..p_n).
  Complex eval(const Eigen::VectorXd& coords) const;
  double eval_real(const Eigen::VectorXd& coords) const;

  // True when f(q,p) has real values on real phase points, i.e. all
  // coefficients are real (the (q,p) chart keeps this simple).
  bool is_real() const;

  // Coefficients in the complex chart z = p + i q, zbar = p - i q, as a map
  // from (z exponent, zbar exponent) to coefficient. Only defined for one
  // degree of freedom.
  std::map<std::pair<int, int>, Complex> complex_chart_terms() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, Complex c);
  int dofs_;
  std::map<Exponents, Complex> terms_;  // exponents -> coefficient
};

}  // namespace gq
