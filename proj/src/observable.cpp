#include "gqkit/observable.hpp"

#include <cmath>
#include <sstream>

#include "gqkit/errors.hpp"

namespace gq {

namespace {
bool nonzero(Complex c) { return c.real() != 0.0 || c.imag() != 0.0; }
}  // namespace

Observable Observable::constant(Complex c, int dofs) {
  Observable f(dofs);
  if (nonzero(c)) f.terms_[Exponents(2 * dofs, 0)] = c;
  return f;
}

Observable Observable::q(int j, int dofs) {
  require(j >= 0 && j < dofs, "dimension-mismatch", "q index out of range");
  Observable f(dofs);
  Exponents e(2 * dofs, 0);
  e[j] = 1;
  f.terms_[e] = 1.0;
  return f;
}

Observable Observable::p(int j, int dofs) {
  require(j >= 0 && j < dofs, "dimension-mismatch", "p index out of range");
  Observable f(dofs);
  Exponents e(2 * dofs, 0);
  e[dofs + j] = 1;
  f.terms_[e] = 1.0;
  return f;
}

Observable Observable::monomial(Complex coeff, const Exponents& q_exp,
                                const Exponents& p_exp) {
  require(q_exp.size() == p_exp.size(), "dimension-mismatch",
          "monomial exponent lists differ in length");
  Observable f(static_cast<int>(q_exp.size()));
  Exponents e(q_exp);
  e.insert(e.end(), p_exp.begin(), p_exp.end());
  if (nonzero(coeff)) f.terms_[e] = coeff;
  return f;
}

int Observable::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

Complex Observable::coefficient(const Exponents& q_exp, const Exponents& p_exp) const {
  Exponents e(q_exp);
  e.insert(e.end(), p_exp.begin(), p_exp.end());
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void Observable::add_term(const Exponents& e, Complex c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (nonzero(c)) terms_[e] = c;
    return;
  }
  it->second += c;
  if (!nonzero(it->second)) terms_.erase(it);
}

Observable& Observable::operator+=(const Observable& rhs) {
  require(dofs_ == rhs.dofs_, "dimension-mismatch", "observable dofs differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Observable& Observable::operator-=(const Observable& rhs) {
  require(dofs_ == rhs.dofs_, "dimension-mismatch", "observable dofs differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Observable& Observable::operator*=(const Observable& rhs) {
  require(dofs_ == rhs.dofs_, "dimension-mismatch", "observable dofs differ");
  std::map<Exponents, Complex> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out[e] += ca * cb;
    }
  }
  terms_.clear();
  for (const auto& [e, c] : out)
    if (nonzero(c)) terms_[e] = c;
  return *this;
}

Observable& Observable::operator*=(Complex s) {
  if (!nonzero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool Observable::operator==(const Observable& rhs) const {
  return dofs_ == rhs.dofs_ && terms_ == rhs.terms_;
}

Observable Observable::dq(int j) const {
  require(j >= 0 && j < dofs_, "dimension-mismatch", "dq index out of range");
  Observable out(dofs_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents d(e);
    d[j] -= 1;
    out.add_term(d, c * double(e[j]));
  }
  return out;
}

Observable Observable::dp(int j) const {
  require(j >= 0 && j < dofs_, "dimension-mismatch", "dp index out of range");
  Observable out(dofs_);
  for (const auto& [e, c] : terms_) {
    if (e[dofs_ + j] == 0) continue;
    Exponents d(e);
    d[dofs_ + j] -= 1;
    out.add_term(d, c * double(e[dofs_ + j]));
  }
  return out;
}

Observable Observable::conjugated() const {
  Observable out(dofs_);
  for (const auto& [e, c] : terms_) out.terms_[e] = std::conj(c);
  return out;
}

Complex Observable::eval(const Eigen::VectorXd& coords) const {
  require(coords.size() == 2 * dofs_, "dimension-mismatch",
          "phase point dimension does not match observable");
  Complex acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) mono *= coords[static_cast<Eigen::Index>(k)];
    acc += c * mono;
  }
  return acc;
}

double Observable::eval_real(const Eigen::VectorXd& coords) const {
  return eval(coords).real();
}

bool Observable::is_real() const {
  for (const auto& [e, c] : terms_)
    if (c.imag() != 0.0) return false;
  return true;
}

std::map<std::pair<int, int>, Complex> Observable::complex_chart_terms() const {
  require(dofs_ == 1, "dimension-mismatch",
          "complex chart is only defined for one degree of freedom");
  // q = -i (z - zbar)/2, p = (z + zbar)/2 with z = p + i q.
  std::map<std::pair<int, int>, Complex> out;
  const Complex I(0.0, 1.0);
  for (const auto& [e, c] : terms_) {
    const int a = e[0];  // q exponent
    const int b = e[1];  // p exponent
    // Expand ((z - zbar) * (-i/2))^a * ((z + zbar)/2)^b term by term.
    std::map<std::pair<int, int>, Complex> part{{{0, 0}, c}};
    for (int r = 0; r < a; ++r) {
      std::map<std::pair<int, int>, Complex> next;
      for (const auto& [zz, cc] : part) {
        next[{zz.first + 1, zz.second}] += cc * (-I * 0.5);
        next[{zz.first, zz.second + 1}] += cc * (I * 0.5);
      }
      part.swap(next);
    }
    for (int r = 0; r < b; ++r) {
      std::map<std::pair<int, int>, Complex> next;
      for (const auto& [zz, cc] : part) {
        next[{zz.first + 1, zz.second}] += cc * 0.5;
        next[{zz.first, zz.second + 1}] += cc * 0.5;
      }
      part.swap(next);
    }
    for (const auto& [zz, cc] : part) out[zz] += cc;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (!nonzero(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

std::string Observable::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")";
    for (int j = 0; j < dofs_; ++j) {
      if (e[j] > 0) os << " q" << j << "^" << int(e[j]);
      if (e[dofs_ + j] > 0) os << " p" << j << "^" << int(e[dofs_ + j]);
    }
  }
  return os.str();
}

}  // namespace gq
