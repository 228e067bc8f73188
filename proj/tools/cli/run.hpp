#pragma once

// Command dispatcher of the bubblering executable. Exit status: 0 success,
// 1 verify-lemmas found a failing property, 2 validation error (bad flags,
// malformed or invalid shape, missing We), 3 solver or quadrature failure.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bubblering::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSolver = 3;

struct RunConfig {
  std::string command;  // analyze | bound | solve | search | verify-lemmas | norbury-table
  std::string shape;    // file path, or inline JSON text
  std::optional<double> we;
  std::uint64_t seed = 42;
  int budget = 200;
  std::string out;      // empty: standard output
  std::string log;      // search: CSV log path (default <out>.log.csv)
  std::optional<std::string> format;  // json | csv
  std::optional<int> resolution;
  double W = 0.0;       // solve
  double lambda = 0.0;  // solve
  std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};  // norbury-table, eps/R0
  double r0 = 1.0;      // norbury-table
  int count = 200;      // verify-lemmas corpus size
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  std::string measure;  // "max_error" or "min_margin"
  int count = 0;
  int failures = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed() const { return failures == 0; }
};

std::vector<SuiteResult> verify_lemmas(std::uint64_t seed, int count);

}  // namespace bubblering::cli
