#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace jordan {

struct SuiteConfig {
  std::string algebra = "sym:2";
  int trials = 200;
  std::uint64_t seed = 1;
  std::map<std::string, double> tol_overrides;
  std::string out_path;
  double explore_dnorm = 1.0;  // target derivation norm for the explore command
};

struct CheckRecord {
  std::string name;
  int trials = 0;
  double value = 0;      // measured extreme (max residual, or min margin probe)
  double threshold = 0;
  char cmp = '<';        // pass iff value cmp threshold
  bool pass = true;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  std::vector<std::string> data_header;
  std::vector<std::vector<std::string>> data_rows;
  double wall_seconds = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// 17 significant digits: doubles round-trip losslessly
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string report_csv(const SuiteReport& r) {
  std::string out = "check,algebra,trials,seed,value,threshold,cmp,pass\n";
  for (const auto& c : r.checks) {
    out += c.name + "," + r.config.algebra + "," + std::to_string(c.trials) + "," +
           std::to_string(r.config.seed) + "," + format_real(c.value) + "," +
           format_real(c.threshold) + "," + std::string(1, c.cmp) + "," +
           (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

inline std::string data_csv(const SuiteReport& r) {
  std::string out;
  for (size_t i = 0; i < r.data_header.size(); ++i)
    out += (i ? "," : "") + r.data_header[i];
  out += "\n";
  for (const auto& row : r.data_rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

inline nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["config"] = {{"algebra", r.config.algebra},
                 {"trials", r.config.trials},
                 {"seed", r.config.seed}};
  nlohmann::json tols = nlohmann::json::object();
  for (const auto& [k, v] : r.config.tol_overrides) tols[k] = v;
  j["config"]["tolerance_overrides"] = tols;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"trials", c.trials},
                           {"value", c.value},
                           {"threshold", c.threshold},
                           {"cmp", std::string(1, c.cmp)},
                           {"pass", c.pass}});
  if (!r.data_header.empty()) {
    j["data_header"] = r.data_header;
    j["data"] = r.data_rows;
  }
  return j;
}

// *.json gets the full report document, *.csv gets the experiment data when
// the suite produced any, the check table otherwise
inline void write_report_file(const SuiteReport& r) {
  if (r.config.out_path.empty()) return;
  std::ofstream out(r.config.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + r.config.out_path);
  const std::string& path = r.config.out_path;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    out << report_json(r).dump(2) << "\n";
  else if (!r.data_header.empty())
    out << data_csv(r);
  else
    out << report_csv(r);
}

inline void print_report(const SuiteReport& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-4s %-34s value %-13.6g %c %-10.4g trials %d",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.cmp, c.threshold,
                  c.trials);
    os << line << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << " suite " << r.suite << " algebra "
     << r.config.algebra << " (" << r.checks.size() << " checks, "
     << format_real(r.wall_seconds) << " s)\n";
}

}  // namespace jordan
