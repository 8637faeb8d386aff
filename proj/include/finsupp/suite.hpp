#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finsupp/profile.hpp"
#include "finsupp/step_function.hpp"
#include "finsupp/theorems.hpp"

namespace finsupp {

// Bumped whenever the generation recipe changes; stamped into verify
// output so stored baselines can't be compared across recipes.
inline constexpr int kFamilyVersion = 1;

// Deterministic test corpus derived from a single seed: random step
// functions, power-tail profiles, and step-function pairs.
struct Family {
  std::uint64_t seed = 0;
  std::vector<StepFunction> steps;                           // 500
  std::vector<RearrangementProfile> tails;                   // 100
  std::vector<std::pair<StepFunction, StepFunction>> pairs;  // 200
};

Family make_family(std::uint64_t seed);

struct SuiteConfig {
  std::vector<double> p_grid = {0.5, 1.0, 2.0, 4.0};
  std::vector<double> alpha_grid = {0.25, 0.5, 1.0, 2.0};
  std::vector<double> q_grid = {0.5, 1.0, 2.0, kInf};
  QuadratureSpec quad;
  std::size_t bracket_stride = 10;  // step subsampling for K-bracket rows
  bool parallel = true;             // run_suite honors this; serial ignores
};

// One verify row: a check (or the worst member of an aggregated check)
// plus the ratio band over the members it covers.
struct SuiteEntry {
  CheckReport report;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t n = 1;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  bool all_pass = true;
};

// Both drivers produce identical results for identical inputs; the
// parallel one distributes rows across OpenMP threads, the serial one
// is the reference the benchmark compares against.
SuiteResult run_suite(const Family& fam, const SuiteConfig& cfg);
SuiteResult run_suite_serial(const Family& fam, const SuiteConfig& cfg);

}  // namespace finsupp
