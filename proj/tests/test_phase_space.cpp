#include <doctest.h>

#include <cmath>
#include <random>

#include "gqkit/errors.hpp"
#include "gqkit/phase_space.hpp"

using namespace gq;

namespace {

Observable oscillator() {
  return Complex(0.5) *
         (Observable::q() * Observable::q() + Observable::p() * Observable::p());
}

// independent derivative oracle: central differences on the evaluated polynomial
double fd_partial(const Observable& f, const Eigen::VectorXd& x, int k,
                  double h = 1e-6) {
  Eigen::VectorXd up = x, dn = x;
  up[k] += h;
  dn[k] -= h;
  return (f.eval_real(up) - f.eval_real(dn)) / (2.0 * h);
}

Observable random_poly(std::mt19937& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Observable f(1);
  for (int t = 0; t < 4; ++t) {
    const int a = deg(rng), b = deg(rng);
    if (a + b > max_deg) continue;
    f += Observable::monomial(double(coeff(rng)), {std::uint16_t(a)},
                              {std::uint16_t(b)});
  }
  return f;
}

}  // namespace

TEST_SUITE("phase_space") {

TEST_CASE("hamiltonian vector field on flat models") {
  const auto M = ModelManifold::flat(1);

  SUBCASE("linear observable f = p") {
    const auto X = hamiltonian_vector_field(M, Observable::p(), PhasePoint::qp(0, 0));
    CHECK(X[0] == doctest::Approx(1.0));
    CHECK(X[1] == doctest::Approx(0.0));
  }

  SUBCASE("oscillator at (q,p) = (1,2)") {
    const auto X = hamiltonian_vector_field(M, oscillator(), PhasePoint::qp(1, 2));
    CHECK(X[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(X[1] == doctest::Approx(-1.0).epsilon(1e-14));
  }

  SUBCASE("constants have vanishing field") {
    const auto X = hamiltonian_vector_field(M, Observable::constant(3.5),
                                            PhasePoint::qp(0.3, -1.2));
    CHECK(X.norm() == 0.0);
  }

  SUBCASE("matches the finite-difference oracle at random points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    for (int it = 0; it < 20; ++it) {
      const Observable f = random_poly(rng);
      Eigen::VectorXd x(2);
      x << pos(rng), pos(rng);
      const auto X = hamiltonian_vector_field(M, f, PhasePoint(x));
      CHECK(X[0] == doctest::Approx(fd_partial(f, x, 1)).epsilon(1e-6));
      CHECK(X[1] == doctest::Approx(-fd_partial(f, x, 0)).epsilon(1e-6));
    }
  }

  SUBCASE("no global chart on the sphere") {
    CHECK_THROWS_WITH_AS(
        hamiltonian_vector_field(ModelManifold::sphere(1.0), Observable::p(),
                                 PhasePoint::qp(0, 0)),
        doctest::Contains("unsupported-manifold"), Error);
  }
}

TEST_CASE("poisson bracket") {
  const Observable q = Observable::q();
  const Observable p = Observable::p();

  SUBCASE("canonical pair {q,p} = 1") {
    CHECK(poisson_bracket(q, p) == Observable::constant(1.0));
  }

  SUBCASE("antisymmetry kills {f,f}") {
    const Observable f = q * q * q * p;
    CHECK(poisson_bracket(f, f).is_zero());
  }

  SUBCASE("{H, q} = -p for the oscillator") {
    CHECK(poisson_bracket(oscillator(), q) == -p);
  }

  SUBCASE("Jacobi identity, exact coefficients") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
      const Observable f = random_poly(rng), g = random_poly(rng),
                       h = random_poly(rng);
      Observable jac = poisson_bracket(f, poisson_bracket(g, h));
      jac += poisson_bracket(g, poisson_bracket(h, f));
      jac += poisson_bracket(h, poisson_bracket(f, g));
      CHECK(jac.is_zero());
    }
  }

  SUBCASE("bracket agrees with omega(X_f, X_g) pointwise") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    const auto M = ModelManifold::flat(1);
    for (int it = 0; it < 100; ++it) {
      const Observable f = random_poly(rng), g = random_poly(rng);
      const Observable fg = poisson_bracket(f, g);
      Eigen::VectorXd x(2);
      x << pos(rng), pos(rng);
      const PhasePoint m(x);
      const double lhs = fg.eval_real(x);
      const double rhs = symplectic_pairing(hamiltonian_vector_field(M, f, m),
                                            hamiltonian_vector_field(M, g, m));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }

  SUBCASE("contraction identity df = X_f . omega on the basis") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    const auto M = ModelManifold::flat(1);
    for (int it = 0; it < 20; ++it) {
      const Observable f = random_poly(rng);
      Eigen::VectorXd x(2);
      x << pos(rng), pos(rng);
      const auto X = hamiltonian_vector_field(M, f, PhasePoint(x));
      for (int k = 0; k < 2; ++k) {
        const double df_k = fd_partial(f, x, k);
        const double contraction =
            symplectic_pairing(X, Eigen::VectorXd::Unit(2, k));
        CHECK(df_k == doctest::Approx(contraction).epsilon(1e-6));
      }
    }
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_WITH_AS(poisson_bracket(Observable::q(0, 1), Observable::q(0, 2)),
                         doctest::Contains("dimension-mismatch"), Error);
  }
}

TEST_CASE("lagrangian of an observable") {
  SUBCASE("free particle: L = p^2/2") {
    const Observable f =
        Complex(0.5) * Observable::p() * Observable::p();  // p^2/2m, m = 1
    CHECK(lagrangian_of(f) == f);
  }
  SUBCASE("position observable: L = -q") {
    CHECK(lagrangian_of(Observable::q()) == -Observable::q());
  }
  SUBCASE("zero maps to zero") {
    CHECK(lagrangian_of(Observable(1)).is_zero());
  }
}

TEST_CASE("generating action along the flow") {
  const auto M = ModelManifold::flat(1);

  SUBCASE("free particle from (0,1) over t=1") {
    const Observable free = Complex(0.5) * Observable::p() * Observable::p();
    const auto r = generating_action(M, free, PhasePoint::qp(0, 1), 1.0, 256);
    CHECK(r.action == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(r.endpoint.q(0) == doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("zero hamiltonian gives zero action") {
    const auto r = generating_action(M, Observable(1), PhasePoint::qp(2, 3), 5.0, 64);
    CHECK(r.action == 0.0);
  }

  SUBCASE("oscillator action over one period") {
    // L = p^2 - H along the flow; closed-form flow gives
    // int_0^{2pi} sin^2 - 1/2 dt = 0.
    const auto r = generating_action(M, oscillator(), PhasePoint::qp(1, 0),
                                     2.0 * M_PI, 4096);
    CHECK(std::abs(r.action) <= 1e-8);
  }

  SUBCASE("energy is conserved along the integrated flow") {
    const Observable H = oscillator();
    const PhasePoint m0 = PhasePoint::qp(1, 0);
    const auto r = generating_action(M, H, m0, 2.0 * M_PI, 4096);
    CHECK(std::abs(H.eval_real(r.endpoint.coords) - H.eval_real(m0.coords)) <=
          1e-8);
  }

  SUBCASE("blowup is reported") {
    // dq/dt = q^2 escapes in finite time
    const Observable f = Observable::p() * Observable::q() * Observable::q();
    CHECK_THROWS_WITH_AS(
        generating_action(M, f, PhasePoint::qp(1, 1), 50.0, 64, 1e3),
        doctest::Contains("flow-blowup"), Error);
  }
}

TEST_CASE("moment map of circle actions") {
  SUBCASE("paper value at (1,1)") {
    CHECK(moment_map_s1({1}, PhasePoint::qp(1, 1)) == doctest::Approx(-1.0));
  }
  SUBCASE("origin") {
    CHECK(moment_map_s1({1}, PhasePoint::qp(0, 0)) == 0.0);
  }
  SUBCASE("weighted two-dof value") {
    Eigen::VectorXd x(4);
    x << 1, 0, 0, 1;  // (x1,x2,y1,y2)
    CHECK(moment_map_s1({2, 3}, PhasePoint(x)) == doctest::Approx(-2.5));
  }
  SUBCASE("defining identity at random points") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    for (int it = 0; it < 100; ++it) {
      Eigen::VectorXd x(4);
      x << pos(rng), pos(rng), pos(rng), pos(rng);
      CHECK(moment_map_defect({2, -1}, PhasePoint(x)) <= 1e-6);
    }
  }
}

TEST_CASE("complex structure checks") {
  const auto J = ComplexStructure::standard(1);
  CHECK(J.square_defect() == 0.0);
  CHECK(J.compatibility_defect() == 0.0);
  CHECK(J.positive());
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 1, 0;
  CHECK(ComplexStructure(bad).square_defect() > 1.0);
}

}  // TEST_SUITE
