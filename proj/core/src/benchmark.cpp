#include "dfvs/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "dfvs/oracle.hpp"
#include "dfvs/pace_io.hpp"

namespace dfvs {

BenchmarkSummary BenchmarkReport::summary() const {
  BenchmarkSummary s;
  for (const BenchmarkRow& row : rows) {
    ++s.instances;
    if (!row.ok) {
      ++s.failed;
      continue;
    }
    if (!row.valid) ++s.invalid;
    s.total_size += row.size;
    s.total_seconds += row.wall_seconds;
  }
  return s;
}

namespace {

BenchmarkRow run_one(const std::filesystem::path& path,
                     const SolverConfig& config) {
  BenchmarkRow row;
  row.instance = path.filename().string();
  const auto t0 = Clock::now();
  try {
    const ParsedInstance parsed = read_instance_file(path);
    const SolveResult result = solve(parsed.instance, config);
    row.vertices = parsed.instance.vertex_count();
    row.edges = parsed.instance.edge_count();
    row.size = result.best.size();
    row.iterations = result.iterations;
    row.valid = is_valid_dfvs(parsed.instance, result.best.vertices);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return row;
}

std::string sanitize(std::string text, char delimiter) {
  std::replace(text.begin(), text.end(), delimiter, ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

BenchmarkReport run_benchmark(const std::filesystem::path& directory,
                              const SolverConfig& config, std::size_t jobs) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  BenchmarkReport report;
  report.rows.resize(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      report.rows[i] = run_one(files[i], config);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, files.size() + 1);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return report;
}

void write_report(const BenchmarkReport& report, std::ostream& out,
                  char delimiter) {
  const char d = delimiter;
  out << "instance" << d << "status" << d << "vertices" << d << "edges" << d
      << "size" << d << "valid" << d << "wall_seconds" << d << "iterations"
      << '\n';
  for (const BenchmarkRow& row : report.rows) {
    out << sanitize(row.instance, d) << d
        << (row.ok ? std::string("ok") : "failed: " + sanitize(row.error, d))
        << d << row.vertices << d << row.edges << d << row.size << d
        << (row.valid ? "true" : "false") << d << row.wall_seconds << d
        << row.iterations << '\n';
  }
}

}  // namespace dfvs
