#include "gqkit/suites.hpp"

#include <chrono>
#include <cmath>

#include "gqkit/errors.hpp"
#include "gqkit/fresnel.hpp"
#include "gqkit/operators.hpp"
#include "gqkit/pairing.hpp"
#include "gqkit/prequant.hpp"
#include "gqkit/quadrature.hpp"
#include "gqkit/szego.hpp"

namespace gq {

namespace {

using Clock = std::chrono::steady_clock;

class Timed {
 public:
  explicit Timed(CheckReport& rep) : rep_(rep), start_(Clock::now()) {}
  ~Timed() {
    rep_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  CheckReport& rep_;
  Clock::time_point start_;
};

CheckReport pc1_check(const std::string& id, const ModelManifold& M,
                      bool expect_integral) {
  CheckReport rep;
  rep.check_id = id;
  Timed timer(rep);
  rep.add_input("model", M.name());
  rep.add_input("hbar", M.hbar);
  if (M.kind == ManifoldKind::Sphere) rep.add_input("radius", M.radius);
  if (M.kind == ManifoldKind::ProductSpheres) {
    rep.add_input("r1", M.radius);
    rep.add_input("r2", M.radius2);
  }
  const auto reports = check_pc1(M);
  bool integral = true;
  for (const auto& r : reports) {
    rep.add_output("integral[" + r.cycle + "]", r.integral_value);
    rep.add_output("ratio[" + r.cycle + "]", r.ratio);
    rep.add_output("is_integral[" + r.cycle + "]", r.is_integral ? "true" : "false");
    integral = integral && r.is_integral;
  }
  rep.add_tolerance("integrality", reports.front().tolerance);
  rep.set_status(integral == expect_integral);
  return rep;
}

ModelManifold model_from_options(const SuiteOptions& opt) {
  if (opt.model == "sphere") return ModelManifold::sphere(opt.radius, opt.hbar);
  if (opt.model == "product-spheres")
    return ModelManifold::product_spheres(opt.r1, opt.r2, opt.hbar);
  if (opt.model == "projective-line") return ModelManifold::projective_line(opt.hbar);
  if (opt.model == "torus")
    return ModelManifold::torus(1.0, {1.0, 0.0}, {0.0, 1.0}, opt.hbar);
  fail("invalid-parameter", "unknown model '" + opt.model +
                                "' (sphere, product-spheres, projective-line, torus)");
}

}  // namespace

SuiteResult suite_prequant(const SuiteOptions& opt) {
  SuiteResult res;

  if (!opt.model.empty()) {
    res.checks.push_back(pc1_check("prequant.pc1", model_from_options(opt), true));
    return res;
  }

  res.checks.push_back(pc1_check(
      "prequant.pc1.sphere-admissible", ModelManifold::sphere(0.5 * opt.hbar, opt.hbar), true));
  res.checks.push_back(pc1_check(
      "prequant.pc1.sphere-inadmissible", ModelManifold::sphere(0.75 * opt.hbar, opt.hbar), false));
  res.checks.push_back(pc1_check(
      "prequant.pc1.product-spheres",
      ModelManifold::product_spheres(0.5 * opt.hbar, 0.5 * opt.hbar, opt.hbar), true));

  {
    CheckReport rep;
    rep.check_id = "prequant.p1-degree";
    Timed timer(rep);
    const double deg = p1_degree();
    rep.add_output("degree", deg);
    rep.add_tolerance("abs", 1e-6);
    rep.set_status(std::abs(deg - 1.0) <= 1e-6);
    res.checks.push_back(rep);
  }

  {
    CheckReport rep;
    rep.check_id = "prequant.torus-lattice";
    Timed timer(rep);
    const bool unit = check_torus_lattice(1.0, {1.0, 0.0}, {0.0, 1.0});
    const bool half = check_torus_lattice(0.5, {1.0, 0.0}, {0.0, 1.0});
    rep.add_output("H=1 lattice {1,i}", unit ? "quantizable" : "not-quantizable");
    rep.add_output("H=1/2 lattice {1,i}", half ? "quantizable" : "not-quantizable");
    rep.set_status(unit && !half);
    res.checks.push_back(rep);
  }

  {
    CheckReport rep;
    rep.check_id = "prequant.pc4-curvature";
    Timed timer(rep);
    CurvatureGrid disk_grid;
    disk_grid.x0 = -0.7 / std::sqrt(2.0); disk_grid.x1 = 0.7 / std::sqrt(2.0);
    disk_grid.y0 = disk_grid.x0; disk_grid.y1 = disk_grid.x1;
    const double disk = curvature_defect(
        HermitianModelMetric::for_model(ModelManifold::disk(opt.hbar)), disk_grid);
    CurvatureGrid flat_grid;
    flat_grid.x0 = -1.5; flat_grid.x1 = 1.5; flat_grid.y0 = -1.5; flat_grid.y1 = 1.5;
    const double flat = curvature_defect(
        HermitianModelMetric::for_model(ModelManifold::flat(1, opt.hbar)), flat_grid);
    const double torus = curvature_defect(
        HermitianModelMetric::for_model(
            ModelManifold::torus(1.0, {1.0, 0.0}, {0.0, 1.0}, opt.hbar)),
        flat_grid);
    rep.add_output("disk_defect", disk);
    rep.add_output("flat_defect", flat);
    rep.add_output("torus_defect", torus);
    rep.add_tolerance("max_norm", 1e-4);
    rep.set_status(disk <= 1e-4 && flat <= 1e-6 && torus <= 1e-4);
    res.checks.push_back(rep);
  }

  {
    CheckReport rep;
    rep.check_id = "prequant.holonomy-circle";
    Timed timer(rep);
    const auto loop = oscillator_loop(1.0, 1 << 18);
    const auto h = holonomy_loop(loop, opt.hbar);
    rep.add_input("energy", 1.0);
    rep.add_output("action", h.action);
    rep.add_output("phase", format_complex(h.phase));
    rep.add_tolerance("abs", 1e-8);
    rep.set_status(std::abs(h.action - 2.0 * M_PI) <= 1e-8);
    res.checks.push_back(rep);
  }

  return res;
}

SuiteResult suite_spectrum(const SuiteOptions& opt) {
  SuiteResult res;
  CheckReport rep;
  rep.check_id = "spectrum.oscillator";
  Timed timer(rep);
  rep.add_input("n", static_cast<double>(opt.n));
  rep.add_input("hbar", opt.hbar);

  const Observable osc =
      Complex(0.5) * (Observable::q() * Observable::q() + Observable::p() * Observable::p());
  const BasisSpec fock = BasisSpec::fock(opt.n, opt.hbar);
  const auto preq = spectrum(prequantum_operator(osc, fock));
  const auto corr = spectrum(corrected_operator(osc, fock));

  bool ok = true;
  CsvTable pre_table{"spectrum_prequantum", "n,energy", {}};
  CsvTable corr_table{"spectrum_corrected", "n,energy", {}};
  for (std::size_t j = 0; j < preq.size(); ++j) {
    ok = ok && preq[j] == opt.hbar * double(j);
    ok = ok && corr[j] == preq[j] + opt.hbar * 0.5;  // exact half-form shift
    pre_table.rows.push_back(std::to_string(j) + "," + format_double(preq[j]));
    corr_table.rows.push_back(std::to_string(j) + "," + format_double(corr[j]));
  }
  rep.add_output("prequantum_first", preq.front());
  rep.add_output("corrected_first", corr.front());
  rep.add_output("levels", std::to_string(preq.size()));
  rep.add_tolerance("abs", 0.0);
  rep.set_status(ok);
  res.checks.push_back(rep);
  res.tables.push_back(pre_table);
  res.tables.push_back(corr_table);
  return res;
}

SuiteResult suite_dirac(const SuiteOptions& opt) {
  SuiteResult res;
  const Observable q = Observable::q();
  const Observable p = Observable::p();

  auto one = [&](const std::string& id, const Observable& f, const Observable& g,
                 int N, double tol) {
    CheckReport rep;
    rep.check_id = id;
    Timed timer(rep);
    rep.add_input("n", static_cast<double>(N));
    const double defect = dirac_defect(f, g, BasisSpec::hermite(N, opt.hbar));
    rep.add_output("defect", defect);
    rep.add_tolerance("max_norm", tol);
    rep.set_status(defect <= tol);
    res.checks.push_back(rep);
  };

  one("dirac.q-p", q, p, opt.dirac_n, 1e-10);
  one("dirac.q-q", q, q, opt.dirac_n, 0.0);
  one("dirac.q2-p", q * q, p, 16, 1e-8);
  return res;
}

namespace {

void pairing_fourier_checks(SuiteResult& res, const SuiteOptions& opt) {
  const BasisSpec basis = BasisSpec::hermite(12, opt.hbar);

  CheckReport rep;
  rep.check_id = "pairing.fourier";
  Timed timer(rep);
  // Gram matrix of projected basis states against the identity.
  double gram_defect = 0.0;
  std::vector<WaveFunction> images;
  for (int j = 0; j <= 8; ++j)
    images.push_back(fourier_projection(WaveFunction::basis_state(j, basis)));
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const Complex g = images[i].coeffs.dot(images[j].coeffs);
      gram_defect = std::max(gram_defect, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  rep.add_output("gram_defect", gram_defect);

  // projection phases i^j on the Hermite eigenfunctions
  double phase_defect = 0.0;
  for (int j = 0; j <= 8; ++j) {
    const Complex expected = std::pow(Complex(0.0, 1.0), j);
    phase_defect = std::max(
        phase_defect, std::abs(images[j].coeffs[j] - expected));
  }
  rep.add_output("eigenphase_defect", phase_defect);

  // pairing symmetry <<s1,s2>> = conj(<<s2,s1>>)
  WaveFunction s1{basis, Eigen::VectorXcd::Zero(basis.size())};
  WaveFunction s2{basis, Eigen::VectorXcd::Zero(basis.size())};
  s1.coeffs[0] = 0.6; s1.coeffs[1] = Complex(0.0, 0.8);
  s2.coeffs[0] = Complex(0.5, -0.1); s2.coeffs[2] = 0.85;
  const Complex fwd = bks_pair_fourier(s1, s2).value;
  const WaveFunction back = fourier_projection_inverse(s1);
  const Complex swapped = s2.coeffs.dot(back.coeffs);
  const double sym_defect = std::abs(fwd - std::conj(swapped));
  rep.add_output("symmetry_defect", sym_defect);

  rep.add_tolerance("gram", 1e-7);
  rep.add_tolerance("symmetry", 1e-8);
  rep.set_status(gram_defect <= 1e-7 && phase_defect <= 1e-7 && sym_defect <= 1e-8);
  res.checks.push_back(rep);
}

void pairing_segal_bargmann_checks(SuiteResult& res, const SuiteOptions& opt) {
  const BasisSpec basis = BasisSpec::hermite(12, 1.0);

  CheckReport rep;
  rep.check_id = "pairing.segal-bargmann";
  Timed timer(rep);

  // ground state image against pi^{-1/4} exp(-q^2/2) on a grid
  std::vector<double> qs;
  for (int i = 0; i <= 80; ++i) qs.push_back(-4.0 + 0.1 * i);
  const auto ground =
      segal_bargmann_position_samples(HolomorphicState::monomial(0, 8), qs);
  double ground_defect = 0.0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const double expected = std::pow(M_PI, -0.25) * std::exp(-0.5 * qs[i] * qs[i]);
    ground_defect = std::max(ground_defect, std::abs(ground[i] - expected));
  }
  rep.add_output("ground_state_defect", ground_defect);

  // z^m lands on h_m with an m-independent norm ratio
  double min_overlap = 1.0;
  double ratio_spread = 0.0;
  double ratio0 = 0.0;
  for (int m = 0; m <= 8; ++m) {
    const HolomorphicState zm = HolomorphicState::monomial(m, 8);
    const WaveFunction img = segal_bargmann_to_position(zm, basis);
    const double overlap = std::abs(img.coeffs[m]) / img.norm();
    min_overlap = std::min(min_overlap, overlap);
    const double ratio = img.norm() / zm.norm();
    if (m == 0) ratio0 = ratio;
    ratio_spread = std::max(ratio_spread, std::abs(ratio - ratio0));
  }
  rep.add_output("min_eigenfunction_overlap", min_overlap);
  rep.add_output("norm_ratio", ratio0);
  rep.add_output("norm_ratio_spread", ratio_spread);

  // round trip through the holomorphic side
  const auto round = segal_bargmann_to_fock(
      segal_bargmann_to_position(HolomorphicState::monomial(1, 4), basis), 4);
  const double round_phase =
      std::abs(std::arg(round.state.coeffs[1] * 2.0 * M_PI));
  rep.add_output("round_trip_multiple",
                 std::abs(round.state.coeffs[1]) * 2.0 * M_PI);
  rep.add_output("kernel_conjugated_in_inverse",
                 round.kernel_conjugated ? "true" : "false");

  rep.add_tolerance("ground_state", 1e-6);
  rep.add_tolerance("overlap", 1e-6);
  rep.add_tolerance("ratio_spread", 1e-5);
  rep.set_status(ground_defect <= 1e-6 && min_overlap >= 1.0 - 1e-6 &&
                 ratio_spread <= 1e-5 && round_phase <= 1e-5);
  res.checks.push_back(rep);
}

void pairing_bogoliubov_checks(SuiteResult& res, const SuiteOptions& opt) {
  CheckReport rep;
  rep.check_id = "pairing.bogoliubov";
  Timed timer(rep);
  rep.add_input("squeeze", opt.squeeze);

  const ComplexStructure J1 = ComplexStructure::standard(1);
  const auto identity_case = bogoliubov_ground_state(J1, J1);
  const double id_defect =
      std::abs(identity_case.det_factor - 1.0) +
      identity_case.lambda_form.cwiseAbs().maxCoeff();
  rep.add_output("identity_defect", id_defect);

  const auto squeezed = bogoliubov_ground_state(J1, squeezed_structure(opt.squeeze));
  rep.add_output("det_factor", format_complex(squeezed.det_factor));
  rep.add_output("lambda_pp", format_complex(squeezed.lambda_form(0, 0)));

  // independent route: project the squeezed vacuum by 2-d quadrature
  const Eigen::VectorXcd analytic = bogoliubov_state_coefficients(squeezed, 8);
  const double a = std::exp(-2.0 * opt.squeeze);
  const double b = std::exp(2.0 * opt.squeeze);
  const auto rx = gauss_hermite(80);
  double oracle_defect = 0.0;
  Eigen::VectorXcd oracle = Eigen::VectorXcd::Zero(9);
  const double sx = 2.0 / std::sqrt(1.0 + a);  // p = sx * u
  const double sy = 2.0 / std::sqrt(1.0 + b);  // q = sy * v
  for (int m = 0; m <= 8; ++m) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
      for (std::size_t j = 0; j < rx.nodes.size(); ++j) {
        const double pp = sx * rx.nodes[i];
        const double qq = sy * rx.nodes[j];
        const Complex z(pp, qq);
        acc += rx.weights[i] * rx.weights[j] * std::pow(z, m);
      }
    }
    const double jac = sx * sy;
    const double nm = std::sqrt(fock_monomial_norm_sq(m));
    oracle[m] = std::conj(acc * jac / (2.0 * M_PI)) / nm;
    oracle_defect = std::max(oracle_defect, std::abs(oracle[m] - analytic[m]));
  }
  rep.add_output("oracle_defect", oracle_defect);
  rep.add_tolerance("oracle", 1e-6);
  rep.set_status(id_defect == 0.0 && oracle_defect <= 1e-6);
  res.checks.push_back(rep);
}

}  // namespace

SuiteResult suite_pairing(const SuiteOptions& opt) {
  SuiteResult res;
  const bool all = opt.pairing_kind == "all";
  if (all || opt.pairing_kind == "fourier") pairing_fourier_checks(res, opt);
  if (all || opt.pairing_kind == "segal-bargmann")
    pairing_segal_bargmann_checks(res, opt);
  if (all || opt.pairing_kind == "bogoliubov") pairing_bogoliubov_checks(res, opt);
  require(!res.checks.empty(), "invalid-parameter",
          "unknown pairing kind '" + opt.pairing_kind + "'");
  return res;
}

SuiteResult suite_fresnel(const SuiteOptions& opt) {
  SuiteResult res;

  {
    CheckReport rep;
    rep.check_id = "fresnel.closed-forms";
    Timed timer(rep);
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      for (double a : {0.5, 1.0, 4.0}) {
        const auto plain = fresnel_gaussian(n, a);
        const auto quad = fresnel_quadratic(n, a, 0, 0);
        // phase ladder c = c_tilde + 1 once the amplitude factor i is split off
        ok = ok && ((quad.c_total - 2) % 8 + 8) % 8 == (quad.c_tilde + 1) % 8;
        // scaling in a
        const auto ref = fresnel_quadratic(n, 1.0, 0, 0);
        const double scaled = std::abs(quad.value) * std::pow(a, 0.5 * n + 1.0);
        ok = ok && std::abs(scaled - std::abs(ref.value)) <= 1e-8 * std::abs(ref.value);
        // parity zero
        if (n >= 2) ok = ok && std::abs(fresnel_quadratic(n, a, 0, 1).value) == 0.0;
        ok = ok && plain.c == n % 8;
      }
    }
    rep.add_output("value_n1_a1", format_complex(fresnel_gaussian(1, 1.0).value()));
    rep.add_output("quad_n1_a1", format_complex(fresnel_quadratic(1, 1.0, 0, 0).value));
    rep.add_tolerance("rel", 1e-8);
    rep.set_status(ok);
    res.checks.push_back(rep);
  }

  {
    CheckReport rep;
    rep.check_id = "fresnel.schrodinger-generator";
    Timed timer(rep);
    rep.add_input("t0", opt.t0);
    rep.add_input("mass", opt.mass);
    const GaussianState psi = GaussianState::density(0.0, 1.0);
    CsvTable table{"fresnel_generator", "t,residual", {}};
    std::vector<double> residuals;
    double t = opt.t0;
    for (int lvl = 0; lvl <= opt.halvings; ++lvl) {
      const auto chk = schrodinger_generator_check(psi, t, opt.mass, opt.hbar);
      residuals.push_back(chk.residual);
      table.rows.push_back(format_double(t) + "," + format_double(chk.residual));
      t *= 0.5;
    }
    bool ok = residuals.front() <= 5e-3;
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
      const double ratio = residuals[i + 1] / residuals[i];
      ok = ok && ratio >= 0.35 && ratio <= 0.65;
    }
    rep.add_output("residual_t0", residuals.front());
    rep.add_tolerance("residual", 5e-3);
    rep.add_tolerance("halving_ratio_band", 0.30);
    rep.set_status(ok);
    res.checks.push_back(rep);
    res.tables.push_back(table);
  }

  return res;
}

SuiteResult suite_szego(const SuiteOptions& opt) {
  SuiteResult res;
  CheckReport rep;
  rep.check_id = "szego.ladder-fit";
  Timed timer(rep);

  const auto ladder_ks = default_k_ladder();
  std::vector<std::complex<double>> pts;
  for (int i = 0; i < 10; ++i)
    pts.push_back(std::polar(0.15 + 0.2 * i, 0.7 * i));

  CsvTable table{"szego_ladder", "k,value", {}};
  std::vector<std::pair<int, double>> ladder;
  bool ok = true;
  double prev = 0.0;
  double max_trace_defect = 0.0;
  double max_homogeneity = 0.0;
  for (int k : ladder_ks) {
    const auto diag = kernel_diagonal(SzegoModel::ProjectiveLine, k, pts);
    max_homogeneity = std::max(max_homogeneity, diag.homogeneity_defect());
    const double value = diag.samples.front().second;
    ok = ok && value > prev;  // monotone in k
    prev = value;
    ladder.emplace_back(k, value);
    table.rows.push_back(std::to_string(k) + "," + format_double(value));
    const double trace = p1_kernel_trace(k);
    max_trace_defect =
        std::max(max_trace_defect, std::abs(trace - (k + 1.0)) / (k + 1.0));
  }
  const auto fit = fit_expansion(ladder);
  const double slope = bargmann_density_slope();
  const double a0_normalized = fit.a0 / slope;

  rep.add_output("n_hat", fit.n_hat);
  rep.add_output("a0_normalized", a0_normalized);
  rep.add_output("max_trace_defect", max_trace_defect);
  rep.add_output("max_homogeneity_defect", max_homogeneity);
  rep.add_tolerance("n_hat", 0.02);
  rep.add_tolerance("a0", 0.02);
  rep.add_tolerance("trace_rel", 1e-6);
  rep.add_tolerance("homogeneity", 1e-6);
  rep.set_status(ok && std::abs(fit.n_hat - 1.0) <= 0.02 &&
                 std::abs(a0_normalized - 1.0) <= 0.02 &&
                 max_trace_defect <= 1e-6 && max_homogeneity <= 1e-6);
  res.checks.push_back(rep);
  res.tables.push_back(table);
  return res;
}

SuiteResult suite_bohr(const SuiteOptions& opt) {
  SuiteResult res;
  CheckReport rep;
  rep.check_id = "bohr.levels";
  Timed timer(rep);
  rep.add_input("d", opt.d);
  rep.add_input("hbar", opt.hbar);

  bool ok = true;
  for (double E : {0.5, 1.0, 3.0}) {
    const auto h = holonomy_loop(oscillator_loop(E, 1 << 18), opt.hbar);
    ok = ok && std::abs(h.action - 2.0 * M_PI * E) <= 1e-8;
  }
  rep.add_output("oscillator_action_check", ok ? "pass" : "fail");

  const auto levels = bohr_sommerfeld_levels(opt.d, opt.n_max, opt.hbar);
  CsvTable table{"bohr_levels", "n,energy", {}};
  for (std::size_t j = 0; j < levels.size(); ++j) {
    table.rows.push_back(std::to_string(j) + "," + format_double(levels[j]));
    ok = ok && levels[j] == opt.hbar * (double(j) + opt.d);
  }
  rep.add_output("first_level", levels.front());
  rep.add_tolerance("action_abs", 1e-8);
  rep.set_status(ok);
  res.checks.push_back(rep);
  res.tables.push_back(table);
  return res;
}

SuiteResult suite_all(const SuiteOptions& opt) {
  SuiteResult all;
  for (auto* fn : {&suite_prequant, &suite_spectrum, &suite_dirac, &suite_pairing,
                   &suite_fresnel, &suite_szego, &suite_bohr}) {
    SuiteResult part = (*fn)(opt);
    all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());
    all.tables.insert(all.tables.end(), part.tables.begin(), part.tables.end());
  }
  return all;
}

}  // namespace gq
