#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfvs/solver.hpp"

namespace dfvs {

struct BenchmarkRow {
  std::string instance;
  bool ok = false;      // parsed and solved
  std::string error;    // set when !ok
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t size = 0;
  bool valid = false;   // recomputed with is_valid_dfvs
  double wall_seconds = 0.0;
  std::size_t iterations = 0;
};

struct BenchmarkSummary {
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::size_t invalid = 0;
  std::size_t total_size = 0;
  double total_seconds = 0.0;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;  // sorted by instance name
  BenchmarkSummary summary() const;
};

/// Solves every regular file in `directory` with `config`, on up to `jobs`
/// worker threads. A failing instance is recorded, never fatal.
BenchmarkReport run_benchmark(const std::filesystem::path& directory,
                              const SolverConfig& config,
                              std::size_t jobs = 1);

/// Header line plus one row per instance.
void write_report(const BenchmarkReport& report, std::ostream& out,
                  char delimiter = ',');

}  // namespace dfvs
