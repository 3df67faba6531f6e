#pragma once

#include <string>
#include <vector>

#include "gqkit/report.hpp"

namespace gq {

// Options shared by the named check suites; every field has a CLI flag.
struct SuiteOptions {
  double hbar = 1.0;

  // prequant: when `model` is set the suite runs the focused admissibility
  // check for that model instead of the default battery.
  std::string model;
  double radius = 0.5;
  double r1 = 0.5;
  double r2 = 0.5;

  int n = 8;         // spectrum truncation
  int dirac_n = 12;  // Dirac check truncation

  std::string pairing_kind = "all";  // fourier | segal-bargmann | bogoliubov | all
  double squeeze = 1.5;

  double t0 = 0.02;  // fresnel generator time step
  int halvings = 2;
  double mass = 1.0;

  double d = 0.5;  // bohr holonomy shift
  int n_max = 7;
};

struct SuiteResult {
  std::vector<CheckReport> checks;
  std::vector<CsvTable> tables;
};

SuiteResult suite_prequant(const SuiteOptions& opt);
SuiteResult suite_spectrum(const SuiteOptions& opt);
SuiteResult suite_dirac(const SuiteOptions& opt);
SuiteResult suite_pairing(const SuiteOptions& opt);
SuiteResult suite_fresnel(const SuiteOptions& opt);
SuiteResult suite_szego(const SuiteOptions& opt);
SuiteResult suite_bohr(const SuiteOptions& opt);
// Union of every suite above, in that order, nothing skipped.
SuiteResult suite_all(const SuiteOptions& opt);

}  // namespace gq
