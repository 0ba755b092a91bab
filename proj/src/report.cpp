#include "weylnoise/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "suites.hpp"

namespace weylnoise {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value, int line) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("invalid value '" + value + "' for " + key, line, key);
  return out;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return seed ^ h;
}

nlohmann::json discrepancy_json(double d) { return std::isfinite(d) ? nlohmann::json(d) : nlohmann::json(nullptr); }

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"group", "clifford", "fiber", "measure", "fock", "noise"};
  return names;
}

bool SuiteConfig::suite_enabled(const std::string& name) const {
  return suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end();
}

DensitySelection parse_density(const std::string& s) {
  if (s == "standard") return DensitySelection::Standard;
  if (s == "printed") return DensitySelection::Printed;
  if (s == "both") return DensitySelection::Both;
  throw ConfigError("density must be standard, printed or both", 0, "density");
}

std::string to_string(DensitySelection d) {
  switch (d) {
    case DensitySelection::Standard: return "standard";
    case DensitySelection::Printed: return "printed";
    case DensitySelection::Both: return "both";
  }
  return "both";
}

void apply_config_entry(SuiteConfig& cfg, const std::string& key, const std::string& value, int line) {
  if (key == "tol_exact") cfg.tol_exact = parse_number<double>(key, value, line);
  else if (key == "tol_quadrature") cfg.tol_quadrature = parse_number<double>(key, value, line);
  else if (key == "grid_r_min") cfg.grid.r_min = parse_number<double>(key, value, line);
  else if (key == "grid_r_max") cfg.grid.r_max = parse_number<double>(key, value, line);
  else if (key == "grid_radial") cfg.grid.radial_order = parse_number<int>(key, value, line);
  else if (key == "grid_polar") cfg.grid.polar_order = parse_number<int>(key, value, line);
  else if (key == "grid_azimuthal") cfg.grid.azimuthal_order = parse_number<int>(key, value, line);
  else if (key == "fock_n") cfg.fock_n = parse_number<int>(key, value, line);
  else if (key == "fock_N") cfg.fock_N = parse_number<int>(key, value, line);
  else if (key == "fock_relation_N") cfg.fock_relation_N = parse_number<int>(key, value, line);
  else if (key == "slots") cfg.slots = parse_number<int>(key, value, line);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value, line);
  else if (key == "samples") cfg.samples = parse_number<int>(key, value, line);
  else if (key == "density") {
    try {
      cfg.density = parse_density(value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line, key);
    }
  } else if (key == "suites") {
    cfg.suites.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (std::find(known_suites().begin(), known_suites().end(), item) == known_suites().end())
        throw ConfigError("unknown suite '" + item + "'", line, key);
      cfg.suites.push_back(item);
    }
  } else {
    throw ConfigError("unknown key '" + key + "'", line, key);
  }
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line, s);
    std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError("missing key", line, "");
    apply_config_entry(cfg, key, trim(s.substr(eq + 1)), line);
  }
  return cfg;
}

SuiteConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path, 0, "config");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate_config(const SuiteConfig& cfg) {
  auto require = [](bool ok, const char* field, const char* msg) {
    if (!ok) throw ConfigError(msg, 0, field);
  };
  require(cfg.tol_exact > 0.0 && std::isfinite(cfg.tol_exact), "tol_exact", "tol_exact must be positive");
  require(cfg.tol_quadrature > 0.0 && std::isfinite(cfg.tol_quadrature), "tol_quadrature",
          "tol_quadrature must be positive");
  require(cfg.grid.r_min > 0.0, "grid_r_min", "grid_r_min must be positive");
  require(cfg.grid.r_max > cfg.grid.r_min && std::isfinite(cfg.grid.r_max), "grid_r_max",
          "grid_r_max must exceed grid_r_min");
  require(cfg.grid.radial_order > 0, "grid_radial", "grid_radial must be positive");
  require(cfg.grid.polar_order > 0, "grid_polar", "grid_polar must be positive");
  require(cfg.grid.azimuthal_order > 0, "grid_azimuthal", "grid_azimuthal must be positive");
  require(cfg.fock_n >= 1 && cfg.fock_n <= 4, "fock_n", "fock_n must be in 1..4");
  require(cfg.fock_N >= 1 && cfg.fock_N <= 24, "fock_N", "fock_N must be in 1..24");
  require(cfg.fock_relation_N >= 1 && cfg.fock_relation_N <= 24, "fock_relation_N", "fock_relation_N must be in 1..24");
  require(cfg.slots >= 2 && cfg.slots <= 12, "slots", "slots must be in 2..12");
  require(cfg.samples >= 1, "samples", "samples must be positive");
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) { return !r.passed; }));
}

const CheckRecord* SuiteReport::find(const std::string& id) const {
  for (const auto& r : checks)
    if (r.id == id) return &r;
  return nullptr;
}

nlohmann::json config_to_json(const SuiteConfig& cfg) {
  return {{"tol_exact", cfg.tol_exact},
          {"tol_quadrature", cfg.tol_quadrature},
          {"grid_r_min", cfg.grid.r_min},
          {"grid_r_max", cfg.grid.r_max},
          {"grid_radial", cfg.grid.radial_order},
          {"grid_polar", cfg.grid.polar_order},
          {"grid_azimuthal", cfg.grid.azimuthal_order},
          {"fock_n", cfg.fock_n},
          {"fock_N", cfg.fock_N},
          {"fock_relation_N", cfg.fock_relation_N},
          {"slots", cfg.slots},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"density", to_string(cfg.density)},
          {"suites", cfg.suites}};
}

SuiteReport run_suites(const SuiteConfig& cfg) {
  validate_config(cfg);
  using Runner = void (*)(detail::SuiteContext&);
  const std::vector<std::pair<std::string, Runner>> runners{
      {"group", detail::run_group_suite},     {"clifford", detail::run_clifford_suite},
      {"fiber", detail::run_fiber_suite},     {"measure", detail::run_measure_suite},
      {"fock", detail::run_fock_suite},       {"noise", detail::run_noise_suite}};

  SuiteReport report;
  report.config = config_to_json(cfg);
  for (const auto& [name, run] : runners) {
    if (!cfg.suite_enabled(name)) continue;
    detail::SuiteContext ctx(cfg, suite_seed(cfg.seed, name));
    run(ctx);
    for (auto& r : ctx.records) report.checks.push_back(std::move(r));
    for (auto& [k, v] : ctx.constants.items()) report.constants[k] = v;
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < report.checks.size(); ++i)
    if (report.checks[i].id == report.checks[i - 1].id)
      throw std::logic_error("run_suites: duplicate check id " + report.checks[i].id);
  return report;
}

std::string emit_report(const SuiteReport& report, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::Json) {
    nlohmann::json j;
    j["version"] = report.version;
    j["config"] = report.config;
    j["constants"] = report.constants;
    j["summary"] = {{"checks", report.checks.size()}, {"failures", report.failures()}};
    j["checks"] = nlohmann::json::array();
    for (const auto& r : report.checks) {
      nlohmann::json c{{"id", r.id},
                       {"anchor", r.anchor},
                       {"status", r.passed ? "pass" : "fail"},
                       {"discrepancy", discrepancy_json(r.discrepancy)},
                       {"tolerance", r.tolerance},
                       {"samples", r.samples}};
      if (include_timing) c["runtime_ms"] = r.runtime_ms;
      j["checks"].push_back(c);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "weylnoise verify " << report.version << "\n";
  out << "config: " << report.config.dump() << "\n";
  for (const auto& [k, v] : report.constants.items()) out << "constant " << k << ": " << v.dump() << "\n";
  for (const auto& r : report.checks) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(40) << r.id << std::right
        << " discrepancy=" << std::setprecision(3) << std::scientific << r.discrepancy
        << " tolerance=" << r.tolerance << std::defaultfloat << " samples=" << r.samples;
    if (include_timing) out << " ms=" << std::fixed << std::setprecision(1) << r.runtime_ms << std::defaultfloat;
    out << "  [" << r.anchor << "]\n";
  }
  out << report.checks.size() << " checks, " << report.failures() << " failures\n";
  return out.str();
}

SuiteReport parse_report(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  SuiteReport r;
  r.version = j.at("version").get<std::string>();
  r.config = j.at("config");
  r.constants = j.at("constants");
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.passed = c.at("status").get<std::string>() == "pass";
    rec.discrepancy = c.at("discrepancy").is_null() ? std::numeric_limits<double>::infinity()
                                                    : c.at("discrepancy").get<double>();
    rec.tolerance = c.at("tolerance").get<double>();
    rec.samples = c.at("samples").get<int>();
    if (c.contains("runtime_ms")) rec.runtime_ms = c.at("runtime_ms").get<double>();
    r.checks.push_back(std::move(rec));
  }
  return r;
}

}  // namespace weylnoise
