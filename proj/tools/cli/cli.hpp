// Copyright 2026 The clcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clcs/differential.hpp"
#include "clcs/solvers.hpp"

namespace clcs::cli {

/// Exit status contract shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,     // usage, parse, I/O or capacity errors
  kExitNegative = 2,  // infeasible, invalid candidate, fuzz mismatch
};

enum class Format { kText, kJson };

/// Thrown for bad flags or unreadable inputs; mapped to kExitError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one sequence from a file. Lines starting with '>' are FASTA
/// headers and are skipped; all whitespace is dropped from the rest.
std::string read_sequence_file(const std::string& path);

/// Rejects symbols outside printable ASCII (0x20..0x7E).
void require_printable(std::string_view name, std::string_view value);

/// Parses CLCS_MEMORY_BUDGET (bytes). Unset or empty yields the default.
std::size_t memory_budget_from_env();

struct Inputs {
  std::string x, y, include, exclude;
};

struct SolveRequest {
  Inputs inputs;
  Algorithm algorithm = Algorithm::kCubic;
  Format format = Format::kText;
  bool stats = false;
  std::size_t memory_budget = kDefaultMemoryBudget;
};

struct CheckRequest {
  Inputs inputs;
  std::string candidate;
  Format format = Format::kText;
};

struct FuzzRequest {
  DifferentialOptions options;
  Format format = Format::kText;
};

struct BenchRequest {
  std::size_t n = 150;
  std::size_t m = 150;
  std::size_t t = 4;
  std::vector<std::size_t> s_values{4, 8, 16};
  std::uint64_t seed = 1;
  std::size_t alphabet = 4;
  Format format = Format::kText;
  std::size_t memory_budget = kDefaultMemoryBudget;
};

/// One solver's measurements in a bench row. `error` is set instead of the
/// counters when the configuration could not run.
struct BenchCell {
  std::optional<std::string> error;
  SolverStats stats;
  ExtLen length = kNegInf;
};

struct BenchRow {
  std::size_t n = 0, m = 0, s = 0, t = 0;
  BenchCell quartic;
  BenchCell cubic;
};

/// The instance timed for one bench row: X, Y random over the alphabet,
/// P planted into both, Q random. Deterministic in (seed, s).
Instance bench_instance(const BenchRequest& request, std::size_t s);

std::vector<BenchRow> run_bench(const BenchRequest& request);

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err);
int cmd_check(const CheckRequest& request, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzRequest& request, std::span<const SolverUnderTest> solvers,
             std::ostream& out, std::ostream& err);
int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err);

/// Full command line entry point. `solvers` overrides the solvers checked
/// by `fuzz` (tests use it to plant a broken solver); empty means
/// default_solvers().
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err, std::span<const SolverUnderTest> solvers = {});

}  // namespace clcs::cli
