#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dfvs/instance.hpp"
#include "dfvs/solver.hpp"

namespace dfvs {

/// Malformed instance text; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedInstance {
  Instance instance;
  std::vector<std::string> warnings;
};

/**
 * PACE 2022 DFVS format. '%' lines are comments anywhere; the first other
 * line is "n m t"; the next n lines list the out-neighbors (1-based) of
 * vertices 1..n, an empty line meaning none. Duplicate edges collapse and an
 * m mismatch is reported as a warning.
 */
ParsedInstance parse_instance(std::string_view text);
ParsedInstance read_instance_file(const std::filesystem::path& path);

/// Serializes back to the same format (t = 0).
std::string format_instance(const Instance& inst);

/// One external id per line, ascending.
void write_solution(const BestSolution& best, std::ostream& out);

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitInvalidSolution = 2,
  kExitUsageError = 3,
};

/// Solver command line. args excludes the program name. Reads the instance
/// from the positional path or from `in`.
int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel = nullptr);

/// Installs SIGTERM/SIGINT handlers that raise the returned flag.
const std::atomic<bool>& install_termination_bridge();

}  // namespace dfvs
