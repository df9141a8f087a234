#include "dfvs/pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dfvs/oracle.hpp"

namespace dfvs {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (true) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

bool is_comment(std::string_view line) {
  return !line.empty() && line.front() == '%';
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<long long> parse_integers(const Line& line) {
  std::vector<long long> values;
  std::string_view rest = line.text;
  while (true) {
    const std::size_t begin = rest.find_first_not_of(" \t");
    if (begin == std::string_view::npos) break;
    rest.remove_prefix(begin);
    const std::size_t len = std::min(rest.find_first_of(" \t"), rest.size());
    const std::string_view token = rest.substr(0, len);
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(line.number,
                       "expected an integer, found '" + std::string(token) + "'");
    values.push_back(value);
    rest.remove_prefix(len);
  }
  return values;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t cursor = 0;
  const auto next_content = [&]() -> const Line* {
    while (cursor < lines.size() && is_comment(lines[cursor].text)) ++cursor;
    return cursor < lines.size() ? &lines[cursor++] : nullptr;
  };

  ParsedInstance result;
  const Line* header = next_content();
  if (header == nullptr || is_blank(header->text))
    throw ParseError(header ? header->number : lines.back().number,
                     "missing header \"n m t\"");
  std::vector<long long> head;
  try {
    head = parse_integers(*header);
  } catch (const ParseError&) {
    throw ParseError(header->number, "malformed header, expected \"n m t\"");
  }
  if (head.size() != 3 || head[0] < 0 || head[1] < 0)
    throw ParseError(header->number, "malformed header, expected \"n m t\"");
  if (head[2] != 0)
    result.warnings.push_back("line " + std::to_string(header->number) +
                              ": ignoring nonzero third header field " +
                              std::to_string(head[2]));

  const auto n = static_cast<std::size_t>(head[0]);
  const auto declared = static_cast<std::size_t>(head[1]);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(declared);
  for (std::size_t v = 0; v < n; ++v) {
    const Line* line = next_content();
    if (line == nullptr)
      throw ParseError(lines.back().number,
                       "expected " + std::to_string(n) +
                           " vertex lines, found " + std::to_string(v));
    for (long long id : parse_integers(*line)) {
      if (id < 1 || id > static_cast<long long>(n))
        throw ParseError(line->number, "neighbor id " + std::to_string(id) +
                                           " out of range [1, " +
                                           std::to_string(n) + "]");
      edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(id - 1));
    }
  }
  while (const Line* extra = next_content()) {
    if (!is_blank(extra->text)) {
      result.warnings.push_back("line " + std::to_string(extra->number) +
                                ": ignoring content after the last vertex");
      break;
    }
  }

  result.instance = Instance(n, edges, declared);
  const std::size_t kept = result.instance.edge_count();
  if (kept != edges.size())
    result.warnings.push_back("collapsed " +
                              std::to_string(edges.size() - kept) +
                              " duplicate edge(s)");
  if (kept != declared)
    result.warnings.push_back("header declares " + std::to_string(declared) +
                              " edges, found " + std::to_string(kept));
  return result;
}

ParsedInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  const std::string text((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
  return parse_instance(text);
}

std::string format_instance(const Instance& inst) {
  std::string out = std::to_string(inst.vertex_count()) + " " +
                    std::to_string(inst.edge_count()) + " 0\n";
  for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
    bool first = true;
    for (Vertex w : inst.successors(static_cast<Vertex>(v))) {
      if (!first) out += ' ';
      out += std::to_string(w + 1);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_solution(const BestSolution& best, std::ostream& out) {
  std::vector<Vertex> ids = best.vertices;
  std::sort(ids.begin(), ids.end());
  std::string text;
  for (Vertex v : ids) {
    text += std::to_string(v + 1);
    text += '\n';
  }
  out << text;
  out.flush();
  if (!out) throw std::ios_base::failure("failed to write solution");
}

int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel) {
  CLI::App app{"Heuristic solver for minimum directed feedback vertex set", "dfvs"};
  std::string input;
  SolverConfig config;
  double time_limit = 600.0;
  std::optional<std::size_t> iterations;
  std::string scoring = "alternate";
  bool validate = false;
  bool verbose = false;

  app.add_option("input", input, "Instance file; standard input if omitted");
  app.add_option("--seed", config.seed, "Random seed");
  app.add_option("--time-limit", time_limit, "Wall-clock budget in seconds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--iterations", iterations,
                 "Run exactly this many local searches, ignoring the time limit");
  app.add_option("--trigger-fraction", config.trigger_fraction,
                 "Edge loss that re-triggers Rules 3-8")
      ->check(CLI::Range(0.05, 0.25));
  app.add_option("--restore-fraction", config.restore_fraction,
                 "Share of the solution freed per local search");
  app.add_option("--degree-bound", config.degree_bound,
                 "Degree bound for the local diclique rules");
  app.add_option("--scoring", scoring, "Vertex selection criterion")
      ->check(CLI::IsMember({"product", "lexicographic", "alternate"}));
  app.add_flag("--validate", validate,
               "Check the solution before printing; exit 2 if it is invalid");
  app.add_flag("--verbose", verbose, "Progress notes on standard error");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!(config.restore_fraction > 0.0 && config.restore_fraction < 1.0))
      throw CLI::ValidationError("--restore-fraction",
                                 "must lie strictly between 0 and 1");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }
  config.time_limit = std::chrono::duration<double>(time_limit);
  config.iteration_limit = iterations;
  config.scoring_mode = scoring == "product"         ? ScoringMode::kProduct
                        : scoring == "lexicographic" ? ScoringMode::kLexicographic
                                                     : ScoringMode::kAlternate;

  ParsedInstance parsed;
  try {
    if (input.empty()) {
      const std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
      parsed = parse_instance(text);
    } else {
      parsed = read_instance_file(input);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  for (const std::string& w : parsed.warnings) err << "warning: " << w << '\n';
  const Instance& inst = parsed.instance;
  if (verbose) {
    err << "c parsed n=" << inst.vertex_count() << " m=" << inst.edge_count()
        << std::endl;
  }

  const SolveResult result = solve(inst, config, cancel);
  if (verbose) {
    err << "c stage1=" << result.stage_one_size
        << " stage2=" << result.stage_two_size
        << " final=" << result.best.size()
        << " iterations=" << result.iterations
        << (result.interrupted ? " interrupted" : "") << std::endl;
  }
  if (validate && !is_valid_dfvs(inst, result.best.vertices)) {
    err << "error: solution failed validation\n";
    return kExitInvalidSolution;
  }
  write_solution(result.best, out);
  return kExitOk;
}

namespace {

std::atomic<bool> g_terminate{false};
static_assert(std::atomic<bool>::is_always_lock_free);

void on_termination_signal(int) {
  g_terminate.store(true, std::memory_order_relaxed);
}

}  // namespace

const std::atomic<bool>& install_termination_bridge() {
  std::signal(SIGTERM, on_termination_signal);
  std::signal(SIGINT, on_termination_signal);
  return g_terminate;
}

}  // namespace dfvs
