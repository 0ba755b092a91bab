#pragma once

#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "weylnoise/report.hpp"
#include "weylnoise/sampling.hpp"

namespace weylnoise::detail {

struct SuiteContext {
  const SuiteConfig& cfg;
  Sampler rng;
  std::vector<CheckRecord> records;
  nlohmann::json constants = nlohmann::json::object();

  SuiteContext(const SuiteConfig& c, std::uint64_t seed) : cfg(c), rng(seed) {}

  // Runs f, which returns the measured discrepancy. An exception counts as a
  // failure with an infinite discrepancy.
  template <class F>
  void check(const std::string& id, const std::string& anchor, double tolerance, int samples, F&& f) {
    CheckRecord r;
    r.id = id;
    r.anchor = anchor;
    r.tolerance = tolerance;
    r.samples = samples;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.discrepancy = f();
    } catch (const std::exception&) {
      r.discrepancy = std::numeric_limits<double>::infinity();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.passed = std::isfinite(r.discrepancy) && r.discrepancy <= tolerance;
    records.push_back(std::move(r));
  }
};

void run_group_suite(SuiteContext& ctx);
void run_clifford_suite(SuiteContext& ctx);
void run_fiber_suite(SuiteContext& ctx);
void run_measure_suite(SuiteContext& ctx);
void run_fock_suite(SuiteContext& ctx);
void run_noise_suite(SuiteContext& ctx);

}  // namespace weylnoise::detail
