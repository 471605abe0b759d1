#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ybcube/presentation.hpp"

namespace ybcube {

// One parsed invocation.  Exactly one subcommand; every run is
// deterministic given the same config (no environment inputs).
struct RunConfig {
  std::string subcommand;

  // input selection (fixture, JSON file, or field construction)
  std::string fixture_name;
  std::string input_path;
  int64_t q = 0;  // prime power; alternative to p/e
  int64_t p = 0;
  int e = 1;
  std::vector<int64_t> modulus;  // empty = default modulus
  std::vector<int64_t> cosets;
  int64_t delta_exponent = 1;
  bool allow_even_q = false;
  int extend_k = 0;

  // verify
  bool run_vh = false;
  bool run_cube = false;
  bool run_ybe = false;
  bool run_qybe = false;
  bool run_all = false;

  // export
  std::string matrix_format;  // "mm" | "csv"
  std::string solution_out;
  std::string link_colors;    // "i,j"
  std::string out_path;       // build/verify/export main output file

  // census
  int census_m = 0;
  int census_l = 0;
  int census_k = 0;
  std::string census_method = "both";  // enum | formula | both
  std::string stream_path;
  bool census_distinct = false;
  bool force_large = false;

  // iso
  std::string iso_a;
  std::string iso_b;
  int64_t iso_budget = 2'000'000;

  bool json_output = false;
  int verbosity = 0;
};

// Build the configured presentation (fixture, file, or Gamma_{M,delta}),
// with the commuting extension applied when requested.
Presentation load_presentation(const RunConfig& config);

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_invariants(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_iso(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on subcommand.  Returns the process exit code: 0 success,
// 1 failed verification/disagreement, 2 usage or construction error.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ybcube
