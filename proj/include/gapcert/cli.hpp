#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gapcert/rational.hpp"

namespace gapcert::cli {

enum class Format { Json, Csv, Text };

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

struct RunConfig {
  std::string subcommand;
  Rational eta = Rational(22, 3295);
  Rational tol = pow10(-8);
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 1;
  std::string output;  // empty: stdout
  Format format = Format::Json;

  // subcommand-specific
  std::string method = "enclosure";  // c1 and report
  std::string dump_hrep;             // volume
  std::vector<Rational> grid;        // scan; empty means evenly spaced points
  int grid_points = 8;
  bool exact_csv = false;
  int lemma = 2;
  int t_min = 3;
  int t_max = 8;
  int max_depth = 64;
};

struct RunOutcome {
  int exit_code = kPass;
  std::string artifact;
};

/// Executes one subcommand. Input problems throw InputError.
RunOutcome run(const RunConfig& config);

/// Parses argv, runs, and writes the artifact to config.output or `out`.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gapcert::cli
