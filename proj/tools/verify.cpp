#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "weylnoise/report.hpp"

using namespace weylnoise;

int main(int argc, char** argv) {
  CLI::App app{"Property checks for the light-like Poincare representation and its Fock-space model"};

  std::string config_path, output = "text", out_path, density;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_radial, grid_angular, fock_n, fock_N, slots;
  std::optional<double> tol_exact, tol_quad;

  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--suite", suites, "suite to run (repeatable)")->check(CLI::IsMember(known_suites()));
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--grid-radial", grid_radial, "radial quadrature order");
  app.add_option("--grid-angular", grid_angular, "polar and azimuthal quadrature order");
  app.add_option("--fock-n", fock_n, "one-particle dimension");
  app.add_option("--fock-N", fock_N, "Fock truncation level");
  app.add_option("--slots", slots, "toy Fock space slots");
  app.add_option("--density", density, "standard|printed|both")->check(CLI::IsMember({"standard", "printed", "both"}));
  app.add_option("--tol-exact", tol_exact, "tolerance for exact identities");
  app.add_option("--tol-quad", tol_quad, "tolerance for quadrature-bound checks");
  app.add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SuiteConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config_file(config_path);
    if (!suites.empty()) cfg.suites = suites;
    if (seed) cfg.seed = *seed;
    if (grid_radial) cfg.grid.radial_order = *grid_radial;
    if (grid_angular) cfg.grid.polar_order = cfg.grid.azimuthal_order = *grid_angular;
    if (fock_n) cfg.fock_n = *fock_n;
    if (fock_N) cfg.fock_N = *fock_N;
    if (slots) cfg.slots = *slots;
    if (!density.empty()) cfg.density = parse_density(density);
    if (tol_exact) cfg.tol_exact = *tol_exact;
    if (tol_quad) cfg.tol_quadrature = *tol_quad;
    validate_config(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error";
    if (e.line > 0) std::cerr << " at line " << e.line;
    if (!e.field.empty()) std::cerr << " (" << e.field << ")";
    std::cerr << ": " << e.what() << "\n";
    return 2;
  }

  SuiteReport report = run_suites(cfg);
  std::string text = emit_report(report, output == "json" ? ReportFormat::Json : ReportFormat::Text);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return report.failures() == 0 ? 0 : 1;
}
