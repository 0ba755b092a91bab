#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylnoise/quadrature.hpp"

namespace weylnoise {

inline constexpr const char* kVersion = "0.1.0";

enum class DensitySelection { Standard, Printed, Both };

/// Run configuration. File format: one `key = value` per line, `#` starts a
/// comment. Keys: tol_exact, tol_quadrature, grid_r_min, grid_r_max,
/// grid_radial, grid_polar, grid_azimuthal, fock_n, fock_N, fock_relation_N,
/// slots, seed, samples, density, suites (comma separated).
struct SuiteConfig {
  double tol_exact = 1e-10;
  double tol_quadrature = 1e-6;
  GridParams grid;
  int fock_n = 2;
  int fock_N = 8;
  int fock_relation_N = 16;
  int slots = 6;
  std::uint64_t seed = 20240607;
  int samples = 100;
  DensitySelection density = DensitySelection::Both;
  std::vector<std::string> suites;  // empty: all

  bool suite_enabled(const std::string& name) const;
};

const std::vector<std::string>& known_suites();

struct ConfigError : std::runtime_error {
  int line;
  std::string field;
  ConfigError(const std::string& msg, int line_, std::string field_)
      : std::runtime_error(msg), line(line_), field(std::move(field_)) {}
};

/// Throws ConfigError on an unknown key or a malformed value.
void apply_config_entry(SuiteConfig& cfg, const std::string& key, const std::string& value, int line = 0);
SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config_file(const std::string& path);
/// Throws ConfigError when a value is out of range.
void validate_config(const SuiteConfig& cfg);

DensitySelection parse_density(const std::string& s);
std::string to_string(DensitySelection d);

struct CheckRecord {
  std::string id;
  std::string anchor;
  bool passed = false;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  int samples = 0;
};

struct SuiteReport {
  nlohmann::json config;
  std::string version = kVersion;
  nlohmann::json constants = nlohmann::json::object();
  std::vector<CheckRecord> checks;  // sorted by id

  int failures() const;
  const CheckRecord* find(const std::string& id) const;
};

/// Runs the selected suites. Deterministic for a given config; failing
/// checks are recorded, never thrown.
SuiteReport run_suites(const SuiteConfig& cfg);

nlohmann::json config_to_json(const SuiteConfig& cfg);

enum class ReportFormat { Json, Text };

std::string emit_report(const SuiteReport& report, ReportFormat format, bool include_timing = true);
/// Inverse of the JSON form of emit_report.
SuiteReport parse_report(const std::string& json_text);

}  // namespace weylnoise
