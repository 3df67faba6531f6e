#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace gq {

// Serialized string for a double with 17 significant digits (round-trip
// exact at double precision).
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<std::pair<std::string, std::string>> tolerances;
  std::string status = "pass";  // pass | fail | warn
  double elapsed_ms = 0.0;

  void set_status(bool pass) { status = pass ? "pass" : "fail"; }
  void add_input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
  void add_input(const std::string& k, double v) { inputs.emplace_back(k, format_double(v)); }
  void add_output(const std::string& k, const std::string& v) { outputs.emplace_back(k, v); }
  void add_output(const std::string& k, double v) { outputs.emplace_back(k, format_double(v)); }
  void add_tolerance(const std::string& k, double v) { tolerances.emplace_back(k, format_double(v)); }
};

// JSON document for a list of checks (schema version 1); deterministic
// except for the elapsed-time fields.
std::string report_json(const std::vector<CheckReport>& checks);

// Same document with elapsed times zeroed, for byte-for-byte comparisons.
std::string report_json_stable(const std::vector<CheckReport>& checks);

// temp-file + rename
void write_file_atomic(const std::string& path, const std::string& contents);

struct CsvTable {
  std::string name;    // file stem, e.g. "szego_ladder"
  std::string header;  // e.g. "k,value"
  std::vector<std::string> rows;
};

void write_csv_atomic(const std::string& dir, const CsvTable& table);

bool all_passed(const std::vector<CheckReport>& checks);

}  // namespace gq
