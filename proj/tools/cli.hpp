#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace srpk::cli {

/// One CLI invocation. Paths left empty mean "not given"; the output goes to
/// the stream passed to run() when `output` is empty.
struct RunConfig {
  std::string command;  // closure, solve, decompose, path, yule-walker, toeplitz-solve
  std::string semiring;
  std::string algorithm;  // empty: the command's default
  std::string matrix;
  std::string graph;
  std::string rhs;
  std::string output;
  std::string paths_output;
  std::string x0 = "zero";
  std::string r;
  std::string r0;
  std::string variant = "general";
  std::optional<std::size_t> max_iter;
  std::optional<double> tol;
  std::optional<std::size_t> split;
  std::optional<std::size_t> band_p;
  std::optional<std::size_t> band_q;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::optional<std::size_t> random;
  bool expand = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  // no closure, no convergence, no inverse, no path
inline constexpr int exit_input = 2;    // bad arguments or input files

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run().
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srpk::cli
