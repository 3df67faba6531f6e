#include "gqkit/report.hpp"

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gqkit/errors.hpp"

namespace gq {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") +
         format_double(z.imag()) + "i";
}

namespace {

nlohmann::ordered_json to_json(const CheckReport& c, bool stable) {
  nlohmann::ordered_json j;
  j["check_id"] = c.check_id;
  nlohmann::ordered_json in, out, tol;
  for (const auto& [k, v] : c.inputs) in[k] = v;
  for (const auto& [k, v] : c.outputs) out[k] = v;
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  j["inputs"] = in;
  j["outputs"] = out;
  j["tolerances"] = tol;
  j["status"] = c.status;
  j["elapsed_ms"] = stable ? 0.0 : c.elapsed_ms;
  return j;
}

std::string render(const std::vector<CheckReport>& checks, bool stable) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) doc["checks"].push_back(to_json(c, stable));
  return doc.dump(2) + "\n";
}

}  // namespace

std::string report_json(const std::vector<CheckReport>& checks) {
  return render(checks, false);
}

std::string report_json_stable(const std::vector<CheckReport>& checks) {
  return render(checks, true);
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    require(os.good(), "io-error", "cannot open " + tmp);
    os << contents;
  }
  std::filesystem::rename(tmp, path);
}

void write_csv_atomic(const std::string& dir, const CsvTable& table) {
  std::filesystem::create_directories(dir);
  std::string body = table.header + "\n";
  for (const auto& r : table.rows) body += r + "\n";
  write_file_atomic((std::filesystem::path(dir) / (table.name + ".csv")).string(),
                    body);
}

bool all_passed(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

}  // namespace gq
