// gqkit: run the geometric-quantization check suites and emit reports.
//
//   gqkit prequant --model sphere --radius 0.5 --hbar 1
//   gqkit all --out report.json --csv-dir tables/
//
// Exit code 0 when every check passes, 1 when any fails, 2 on bad arguments.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gqkit/errors.hpp"
#include "gqkit/suites.hpp"

namespace {

void print_summary(const std::vector<gq::CheckReport>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.status == "pass" ? "[PASS] " : c.status == "warn" ? "[WARN] "
                                                                      : "[FAIL] ")
              << c.check_id;
    for (const auto& [k, v] : c.outputs) std::cout << "  " << k << "=" << v;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric quantization checks on model phase spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  gq::SuiteOptions opt;
  std::string out_path;
  std::string csv_dir;
  app.add_option("--hbar", opt.hbar, "Planck constant (action units)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the JSON report to this path");
  app.add_option("--csv-dir", csv_dir, "write plot-ready CSV tables here");

  std::map<std::string, std::function<gq::SuiteResult(const gq::SuiteOptions&)>> runners;

  auto* prequant = app.add_subcommand("prequant", "integrality and curvature checks");
  prequant->fallthrough();
  prequant->add_option("--model", opt.model,
                       "sphere | product-spheres | projective-line | torus");
  prequant->add_option("--radius", opt.radius, "sphere radius");
  prequant->add_option("--r1", opt.r1, "first product-sphere radius");
  prequant->add_option("--r2", opt.r2, "second product-sphere radius");
  runners["prequant"] = gq::suite_prequant;

  auto* spectrum = app.add_subcommand("spectrum", "oscillator spectra, prequantum vs corrected");
  spectrum->fallthrough();
  spectrum->add_option("--n", opt.n, "basis truncation order");
  runners["spectrum"] = gq::suite_spectrum;

  auto* dirac = app.add_subcommand("dirac", "commutator defects");
  dirac->fallthrough();
  dirac->add_option("--n", opt.dirac_n, "basis truncation order");
  runners["dirac"] = gq::suite_dirac;

  auto* pairing = app.add_subcommand("pairing", "polarization pairings");
  pairing->fallthrough();
  pairing->add_option("--kind", opt.pairing_kind,
                      "fourier | segal-bargmann | bogoliubov | all");
  pairing->add_option("--squeeze", opt.squeeze, "squeeze parameter for bogoliubov");
  runners["pairing"] = gq::suite_pairing;

  auto* fresnel = app.add_subcommand("fresnel", "oscillatory integrals and the generator");
  fresnel->fallthrough();
  fresnel->add_option("--t0", opt.t0, "initial evolution time");
  fresnel->add_option("--halvings", opt.halvings, "number of t halvings");
  fresnel->add_option("--mass", opt.mass, "particle mass");
  runners["fresnel"] = gq::suite_fresnel;

  auto* szego = app.add_subcommand("szego", "kernel diagonals and the asymptotic fit");
  szego->fallthrough();
  (void)szego;
  runners["szego"] = gq::suite_szego;

  auto* bohr = app.add_subcommand("bohr", "action integrals and level tables");
  bohr->fallthrough();
  bohr->add_option("--d", opt.d, "holonomy shift in [0,1)");
  bohr->add_option("--n-max", opt.n_max, "highest level index");
  runners["bohr"] = gq::suite_bohr;

  app.add_subcommand("all", "every suite")->fallthrough();
  runners["all"] = gq::suite_all;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const gq::SuiteResult result = runners.at(name)(opt);
    print_summary(result.checks);
    if (!out_path.empty())
      gq::write_file_atomic(out_path, gq::report_json(result.checks));
    if (!csv_dir.empty())
      for (const auto& t : result.tables) gq::write_csv_atomic(csv_dir, t);
    return gq::all_passed(result.checks) ? 0 : 1;
  } catch (const gq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
