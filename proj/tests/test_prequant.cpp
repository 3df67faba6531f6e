#include <doctest.h>

#include <cmath>

#include "gqkit/errors.hpp"
#include "gqkit/prequant.hpp"

using namespace gq;
using gq::Complex;

TEST_SUITE("prequant") {

TEST_CASE("symplectic volume of the sphere") {
  for (double r : {0.3, 1.0, 2.5}) {
    const double integral = integrate_symplectic_form(ModelManifold::sphere(r));
    CHECK(integral / (4.0 * M_PI * r) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("PC1 admissibility") {
  SUBCASE("half-integer radius is admissible") {
    const auto reps = check_pc1(ModelManifold::sphere(0.5));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(reps[0].is_integral);
  }
  SUBCASE("r = 0.75 is not, and the neighbours are reported") {
    const auto reps = check_pc1(ModelManifold::sphere(0.75));
    CHECK_FALSE(reps[0].is_integral);
    bool has_half = false, has_one = false;
    for (double r : reps[0].nearest_admissible) {
      has_half = has_half || r == 0.5;
      has_one = has_one || r == 1.0;
    }
    CHECK(has_half);
    CHECK(has_one);
  }
  SUBCASE("product of equal admissible spheres") {
    const auto reps = check_pc1(ModelManifold::product_spheres(0.5, 0.5));
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].is_integral);
    CHECK(reps[1].is_integral);
  }
  SUBCASE("incommensurable radii fail") {
    const auto reps = check_pc1(ModelManifold::product_spheres(0.5, 0.5 * std::sqrt(2.0)));
    CHECK(reps[0].is_integral);
    CHECK_FALSE(reps[1].is_integral);
  }
  SUBCASE("doubling hbar halves the ratio exactly") {
    const double r1 = check_pc1(ModelManifold::sphere(0.8, 1.0))[0].ratio;
    const double r2 = check_pc1(ModelManifold::sphere(0.8, 2.0))[0].ratio;
    CHECK(r2 == 0.5 * r1);
  }
  SUBCASE("no compact cycle on the flat model") {
    CHECK_THROWS_WITH_AS(check_pc1(ModelManifold::flat(1)),
                         doctest::Contains("unsupported-manifold"), Error);
  }
}

TEST_CASE("projective line degree integral") {
  CHECK(p1_degree() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("torus lattice integrality") {
  CHECK(check_torus_lattice(1.0, {1, 0}, {0, 1}));
  CHECK_FALSE(check_torus_lattice(0.5, {1, 0}, {0, 1}));
  CHECK(check_torus_lattice(1.0, {1, 0}, {0, 2}));  // Im H(1, 2i) = -2
  CHECK_THROWS_WITH_AS(check_torus_lattice(1.0, {1, 0}, {2, 0}),
                       doctest::Contains("degenerate-lattice"), Error);
}

TEST_CASE("curvature of the model metrics by finite differences") {
  SUBCASE("disk against the hyperbolic coefficient") {
    CurvatureGrid grid;
    const double half = 0.7 / std::sqrt(2.0);
    grid.x0 = -half; grid.x1 = half; grid.y0 = -half; grid.y1 = half;
    const auto hm = HermitianModelMetric::for_model(ModelManifold::disk());
    CHECK(curvature_defect(hm, grid) <= 1e-4);
  }
  SUBCASE("torus weight against pi H") {
    CurvatureGrid grid;
    const auto hm = HermitianModelMetric::for_model(
        ModelManifold::torus(1.0, {1, 0}, {0, 1}));
    CHECK(curvature_defect(hm, grid) <= 1e-4);
  }
  SUBCASE("flat plane is exactly quadratic") {
    CurvatureGrid grid;
    const auto hm = HermitianModelMetric::for_model(ModelManifold::flat(1));
    CHECK(curvature_defect(hm, grid) <= 1e-6);
  }
  SUBCASE("projective line weight") {
    CurvatureGrid grid;
    const auto hm = HermitianModelMetric::for_model(ModelManifold::projective_line());
    CHECK(curvature_defect(hm, grid) <= 1e-4);
  }
  SUBCASE("O(step^2) refinement on the disk") {
    const auto hm = HermitianModelMetric::for_model(ModelManifold::disk());
    CurvatureGrid grid;
    const double half = 0.7 / std::sqrt(2.0);
    grid.x0 = -half; grid.x1 = half; grid.y0 = -half; grid.y1 = half;
    grid.fd_step = 8e-3;
    const double d1 = curvature_defect(hm, grid);
    grid.fd_step = 2e-3;
    const double d2 = curvature_defect(hm, grid);
    const double slope = std::log(d1 / d2) / std::log(4.0);
    CHECK(slope >= 1.6);
    CHECK(slope <= 2.4);
  }
  SUBCASE("stencil leaving the disk is an error") {
    CurvatureGrid grid;
    grid.x0 = 0.99; grid.x1 = 0.999; grid.y0 = 0.0; grid.y1 = 0.001;
    const auto hm = HermitianModelMetric::for_model(ModelManifold::disk());
    CHECK_THROWS_WITH_AS(curvature_defect(hm, grid),
                         doctest::Contains("stencil-out-of-domain"), Error);
  }
}

TEST_CASE("holonomy of loops") {
  SUBCASE("oscillator circle encloses 2 pi E") {
    // Green's theorem oracle: the loop integral of p dq equals the signed
    // polygon area, computed here with the shoelace formula.
    const auto loop = oscillator_loop(1.0, 1 << 18);
    const auto h = holonomy_loop(loop);
    CHECK(std::abs(h.action - 2.0 * M_PI) <= 1e-8);
    double shoelace = 0.0;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i)
      shoelace += 0.5 * (loop[i].x() * loop[i + 1].y() - loop[i + 1].x() * loop[i].y());
    CHECK(h.action == doctest::Approx(-shoelace).epsilon(1e-9));
  }
  SUBCASE("degenerate loop") {
    const auto h = holonomy_loop({Eigen::Vector2d(0.3, -0.7)});
    CHECK(h.action == 0.0);
    CHECK(h.phase == std::complex<double>(1.0, 0.0));
  }
  SUBCASE("orientation reversal flips the action") {
    auto loop = oscillator_loop(1.0, 4096);
    std::vector<Eigen::Vector2d> rev(loop.rbegin(), loop.rend());
    CHECK(holonomy_loop(rev).action ==
          doctest::Approx(-holonomy_loop(loop).action).epsilon(1e-14));
  }
  SUBCASE("phase is reparametrization invariant") {
    const auto a = holonomy_loop(oscillator_loop(1.0, 1 << 18));
    const auto b = holonomy_loop(oscillator_loop(1.0, 200001));
    CHECK(std::abs(a.phase - b.phase) <= 1e-8);
  }
  SUBCASE("open polyline is rejected") {
    CHECK_THROWS_WITH_AS(
        holonomy_loop({Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)}),
        doctest::Contains("open-loop"), Error);
  }
}

TEST_CASE("Bohr-Sommerfeld levels") {
  SUBCASE("corrected oscillator ladder") {
    const auto lv = bohr_sommerfeld_levels(0.5, 2);
    REQUIRE(lv.size() == 3);
    CHECK(lv[0] == 0.5);
    CHECK(lv[1] == 1.5);
    CHECK(lv[2] == 2.5);
  }
  SUBCASE("uncorrected ladder") {
    const auto lv = bohr_sommerfeld_levels(0.0, 2);
    CHECK(lv[0] == 0.0);
    CHECK(lv[1] == 1.0);
    CHECK(lv[2] == 2.0);
  }
  SUBCASE("linear scaling in hbar") {
    CHECK(bohr_sommerfeld_levels(0.5, 0, 2.0)[0] == 1.0);
  }
  SUBCASE("shift outside [0,1) is rejected") {
    CHECK_THROWS_AS(bohr_sommerfeld_levels(1.5, 3), Error);
  }
}

}  // TEST_SUITE
